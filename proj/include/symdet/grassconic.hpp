#pragma once

#include <variant>

#include "symdet/quadric.hpp"

namespace symdet {

// A point of the conic Hilbert scheme: a 3-plane in wedge coordinates
// together with a symmetric 3x3 conic matrix in the canonical basis of the
// plane, up to scalar (canonicalized on construction).
struct GrassConic {
  GrassConic(ThreePlaneU u_, Matrix c_);
  ThreePlaneU u;
  Matrix c;
};

struct TauConic {
  Matrix c;               // canonical c_U
  std::size_t conic_rank; // 1..3
};
struct RhoPlane {
  Subspace vn2;  // all (n-1)-subspaces containing vn2
};
struct SigmaPlane {
  Subspace vn3, vn;  // all (n-1)-subspaces between vn3 and vn
};
struct NotOnYbar {
  std::size_t rank_phi;  // >= 2
};
using ConicClass = std::variant<TauConic, RhoPlane, SigmaPlane, NotOnYbar>;

ConicClass classify(const ThreePlaneU& u);

const char* conic_class_name(const ConicClass& c);

// Containment of the conic's zero locus in the zero locus of the plane's
// quadric system: rank_phi <= 1 and, when rank_phi = 1, c proportional to
// the induced conic.
bool y0_validate(const GrassConic& g);

// True iff the (n-3)-subspace w annihilates u.
bool y3_member(const ThreePlaneU& u, const Subspace& w);

// The conic of maximal linear subspaces of a rank-3 or split rank-4
// quadric; `sheet` (1 or 2) selects the ruling in the rank-4 case.
GrassConic family_conic(const Quadric& q, std::optional<int> sheet);

// Flag-tuple models of reducible conics and their degenerations.
struct FlagTuple {
  enum class Kind { F1, F2, D3, D4 };
  Kind kind;
  std::optional<Subspace> vn3, vn2, vn2p, vn1, vn, vnp;
  // F1 only: acknowledges an intentionally diagonal tuple
  // (both flags equal), which flags_to_conic rejects.
  bool diagonal_tag = false;

  bool is_diagonal() const;
};

struct FlagCheck {
  bool ok;
  std::vector<std::string> violations;
};

FlagCheck validate_flag(const FlagTuple& t, std::size_t n);

// U spanned by the two lines of a non-degenerate F1 tuple, with the rank-2
// conic cutting out their union.
GrassConic flags_to_conic(const FlagTuple& t, std::size_t n);

// Recovers the F1 tuple from a rank-2 conic point; canonical representative
// of the unordered pair (lex order on the flag encodings).
FlagTuple conic_to_flags(const GrassConic& g);

}  // namespace symdet
