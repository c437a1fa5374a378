#ifndef SU2HOM_CHAIN_COMPLEX_HPP
#define SU2HOM_CHAIN_COMPLEX_HPP

#include <functional>
#include <string>
#include <vector>

#include "su2hom/abelian_group.hpp"
#include "su2hom/int_matrix.hpp"

namespace su2hom {

enum class Coefficients { Z, Z2 };

// Finite chain complex of free Z-modules
//   C_0 <- C_1 <- ... <- C_top,   boundary(k) : C_k -> C_{k-1}.
// boundary(0) and boundary(top+1) are the obvious zero maps; cell labels are
// optional and carried only for serialization and the collapse construction.
struct ChainComplex {
    std::vector<int> dims;                        // dims[k] = #cells in degree k
    std::vector<IntMatrix> boundaries;            // boundaries[k] = boundary(k), k >= 1
    std::vector<std::vector<std::string>> labels; // optional, per degree

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
    int dim(int k) const;
    IntMatrix boundary(int k) const;  // zero-extended outside [1, top]

    // Shape checks plus boundary(k) * boundary(k+1) == 0 for all k.
    void validate() const;

    int euler_characteristic() const;

    AbelianGroup homology(int k) const;
    std::vector<AbelianGroup> homology_all() const;

    // Integral or mod-2 cohomology of the dual complex.  Over Z2 the groups
    // come back as elementary abelian (free_rank 0, all divisors 2).
    std::vector<AbelianGroup> cohomology(
        Coefficients c,
        const std::function<void(int, const AbelianGroup&)>& progress = {}) const;
};

// H = ker(boundary_out) / im(boundary_in), where boundary_out : C -> C' and
// boundary_in : C'' -> C meet in the same middle module.
// Throws CompositionNotZero when boundary_out * boundary_in != 0.
AbelianGroup homology_at(const IntMatrix& boundary_out, const IntMatrix& boundary_in);

std::vector<AbelianGroup> cohomology_with_coefficients(const ChainComplex& c, Coefficients k);

}  // namespace su2hom

#endif
