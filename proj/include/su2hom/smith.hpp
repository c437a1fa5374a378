#ifndef SU2HOM_SMITH_HPP
#define SU2HOM_SMITH_HPP

#include <optional>
#include <vector>

#include "su2hom/int_matrix.hpp"

namespace su2hom {

// Result of a Smith normal form computation: S = U * M * V with U, V
// unimodular and S diagonal, d_1 | d_2 | ... | d_r, all d_k > 0.
struct SmithResult {
    IntMatrix S;
    std::optional<IntMatrix> U;  // accumulated only on request
    std::optional<IntMatrix> V;

    int rank() const;
    // Diagonal entries > 1, in divisor-chain order.
    std::vector<Int> torsion_divisors() const;
    // All nonzero diagonal entries (including 1s), in divisor-chain order.
    std::vector<Int> invariant_factors() const;
};

// Exact integer Smith normal form.  Elimination picks the smallest-magnitude
// nonzero pivot (ties broken by Markowitz fill-in count), reduces with
// nearest-integer quotients, and repairs the divisor chain before advancing,
// so the divisibility d_k | d_{k+1} holds by construction.
SmithResult smith_normal_form(const IntMatrix& m, bool accumulate = false);

// Rank over Z (shortcut through the same elimination).
int integer_rank(const IntMatrix& m);

}  // namespace su2hom

#endif
