#pragma once

#include <stdexcept>
#include <string>

namespace symdet {

// Base of everything this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: wrong shapes, mixed fields, out-of-range parameters.
// The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// A mathematically meaningful refusal: the requested object does not exist
// over the base field or the input sits on a degenerate locus.
// The CLI maps these to exit code 1.
class ConditionError : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class WrongRank : public ConditionError {
 public:
  using ConditionError::ConditionError;
};

class RankTooHigh : public ConditionError {
 public:
  using ConditionError::ConditionError;
};

class WrongDimension : public InputError {
 public:
  using InputError::InputError;
};

class NotIsotropic : public ConditionError {
 public:
  using ConditionError::ConditionError;
};

// The two sheets / two lines are conjugate over the base field.
class NonSplitQuadric : public ConditionError {
 public:
  using ConditionError::ConditionError;
};

class NonSplitForm : public ConditionError {
 public:
  using ConditionError::ConditionError;
};

class AmbiguousQuadric : public ConditionError {
 public:
  using ConditionError::ConditionError;
};

class DegenerateFlags : public ConditionError {
 public:
  using ConditionError::ConditionError;
};

class WrongConicRank : public ConditionError {
 public:
  using ConditionError::ConditionError;
};

class NotOnG36 : public ConditionError {
 public:
  using ConditionError::ConditionError;
};

}  // namespace symdet
