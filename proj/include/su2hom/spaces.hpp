#ifndef SU2HOM_SPACES_HPP
#define SU2HOM_SPACES_HPP

#include <array>

#include "su2hom/chain_complex.hpp"
#include "su2hom/equivariant_complex.hpp"

namespace su2hom {

// Cell-level computations get expensive fast; callers can raise the guard
// explicitly (CLI: flag/config/env), everything else stays at the default.
inline constexpr int kDefaultOracleGuard = 6;

// Orbit complex of (two-sphere) x (n circles) under the diagonal involution:
// the desingularized model.  3 * 4^n cells across degrees 0..n+2.
// Throws GuardExceeded when n exceeds the guard, std::invalid_argument on n < 1.
ChainComplex blowup_complex(int n, int guard = kDefaultOracleGuard);

// Collapse each of the 2^n projective-plane subcomplexes (sign vector a:
// every circle factor sits at the fixed 0-cell a_i) to its own point.  The
// result is a cell model of the space of commuting n-tuples.  Degree 0 has
// one cell per sign vector, ordered lexicographically with +1 before -1.
ChainComplex collapse_to_yn(int n, int guard = kDefaultOracleGuard);

// Cohomology of the projective plane with a local coefficient system: the
// involution acts on the coefficient lattice Z^m by `action`.  Computed from
// the free orbit cell structure of the two-sphere, whose equivariant cochain
// complex is  M --(action - 1)--> M --(action + 1)--> M.
std::array<AbelianGroup, 3> rp2_local_cohomology(const IntMatrix& action);

// Rank-one special case: untwisted (Z, 0, Z2) or sign-twisted (0, Z2, Z).
std::array<AbelianGroup, 3> twisted_rp2_cohomology(bool twisted);

}  // namespace su2hom

#endif
