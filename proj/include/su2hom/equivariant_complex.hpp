#ifndef SU2HOM_EQUIVARIANT_COMPLEX_HPP
#define SU2HOM_EQUIVARIANT_COMPLEX_HPP

#include <string>
#include <vector>

#include "su2hom/chain_complex.hpp"
#include "su2hom/int_matrix.hpp"

namespace su2hom {

enum class OrbitTag { Fixed, FreeOrbit };

struct EquivariantCell {
    OrbitTag tag;
    std::string label;
};

// Chain complex with a cellular involution gamma.  gamma is stored per degree
// as a signed permutation matrix; a Fixed cell must be sent to itself with
// sign +1, a FreeOrbit cell to a different cell.
struct EquivariantChainComplex {
    std::vector<std::vector<EquivariantCell>> cells;  // per degree
    std::vector<IntMatrix> boundaries;                // as in ChainComplex
    std::vector<IntMatrix> gamma;                     // gamma[k] : C_k -> C_k

    int top_degree() const { return static_cast<int>(cells.size()) - 1; }
    int dim(int k) const;
    IntMatrix boundary(int k) const;

    // gamma^2 = id, gamma a signed permutation, gamma * boundary =
    // boundary * gamma, boundary * boundary = 0, orbit tags consistent.
    void validate() const;

    ChainComplex underlying() const;  // forget the action
};

// Two-sphere with the antipodal action: one free cell orbit in each of the
// degrees 0, 1, 2; on orbit generators the boundaries are gamma - 1 and
// gamma + 1.  Cell labels p, gp, e, ge, f, gf.
EquivariantChainComplex sphere_complex();

// Circle with the reflection action: fixed 0-cells at +1 and -1 (labels "1",
// "-1") and one free orbit of 1-cells e, ge with boundary e |-> (-1) - (+1).
EquivariantChainComplex circle_complex();

// Tensor product with the diagonal action; boundaries follow the alternating
// sign rule d(a(x)b) = da(x)b + (-1)^{|a|} a(x)db.  Cell labels join with '|'.
EquivariantChainComplex tensor(const EquivariantChainComplex& a,
                               const EquivariantChainComplex& b);
EquivariantChainComplex tensor(const std::vector<EquivariantChainComplex>& factors);

// Chain complex of the orbit space of a free action: one generator per orbit
// (the lower-indexed cell represents), boundaries push forward along the
// identification gamma c ~ c.  Throws ActionNotFree on any Fixed cell.
ChainComplex quotient_by_gamma(const EquivariantChainComplex& c);

}  // namespace su2hom

#endif
