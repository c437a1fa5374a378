#include "su2hom/chain_complex.hpp"

#include <sstream>
#include <stdexcept>

#include "su2hom/errors.hpp"
#include "su2hom/mod2.hpp"
#include "su2hom/smith.hpp"

namespace su2hom {

int ChainComplex::dim(int k) const {
    if (k < 0 || k > top_degree()) return 0;
    return dims[k];
}

IntMatrix ChainComplex::boundary(int k) const {
    if (k >= 1 && k < static_cast<int>(boundaries.size())) return boundaries[k];
    return IntMatrix(dim(k - 1), dim(k));
}

void ChainComplex::validate() const {
    if (dims.empty()) throw std::invalid_argument("ChainComplex: no degrees");
    if (boundaries.size() != dims.size())
        throw std::invalid_argument("ChainComplex: need one boundary slot per degree");
    for (int k = 1; k <= top_degree(); ++k) {
        const IntMatrix& b = boundaries[k];
        if (b.rows() != dims[k - 1] || b.cols() != dims[k]) {
            std::ostringstream os;
            os << "ChainComplex: boundary(" << k << ") has shape " << b.rows() << "x"
               << b.cols() << ", expected " << dims[k - 1] << "x" << dims[k];
            throw std::invalid_argument(os.str());
        }
    }
    for (int k = 1; k < top_degree(); ++k) {
        if (!(boundary(k) * boundary(k + 1)).is_zero()) {
            std::ostringstream os;
            os << "boundary(" << k << ") * boundary(" << k + 1 << ") != 0";
            throw CompositionNotZero(os.str());
        }
    }
}

int ChainComplex::euler_characteristic() const {
    int chi = 0, sign = 1;
    for (int d : dims) {
        chi += sign * d;
        sign = -sign;
    }
    return chi;
}

namespace {

// rank and torsion divisors of every boundary map, each SNF computed once
struct BoundaryData {
    std::vector<int> rank;                   // rank[k] = rank boundary(k), k in [0, top+1]
    std::vector<std::vector<Int>> divisors;  // torsion divisors of boundary(k)
};

BoundaryData analyze(const ChainComplex& c) {
    const int top = c.top_degree();
    BoundaryData d;
    d.rank.assign(top + 2, 0);
    d.divisors.assign(top + 2, {});
    for (int k = 1; k <= top; ++k) {
        SmithResult s = smith_normal_form(c.boundary(k));
        d.rank[k] = s.rank();
        d.divisors[k] = s.torsion_divisors();
    }
    return d;
}

}  // namespace

AbelianGroup ChainComplex::homology(int k) const {
    return homology_at(boundary(k), boundary(k + 1));
}

std::vector<AbelianGroup> ChainComplex::homology_all() const {
    validate();
    BoundaryData d = analyze(*this);
    std::vector<AbelianGroup> out;
    for (int k = 0; k <= top_degree(); ++k) {
        int free = dim(k) - d.rank[k] - d.rank[k + 1];
        out.emplace_back(free, d.divisors[k + 1]);
    }
    return out;
}

std::vector<AbelianGroup> ChainComplex::cohomology(
    Coefficients coeff, const std::function<void(int, const AbelianGroup&)>& progress) const {
    validate();
    std::vector<AbelianGroup> out;
    if (coeff == Coefficients::Z) {
        // H^k has the free rank of H_k and the torsion of H_{k-1}
        BoundaryData d = analyze(*this);
        for (int k = 0; k <= top_degree(); ++k) {
            int free = dim(k) - d.rank[k] - d.rank[k + 1];
            out.emplace_back(free, d.divisors[k]);
            if (progress) progress(k, out.back());
        }
    } else {
        std::vector<int> r2(top_degree() + 2, 0);
        for (int k = 1; k <= top_degree(); ++k) r2[k] = mod2_rank(boundary(k));
        for (int k = 0; k <= top_degree(); ++k) {
            out.push_back(AbelianGroup::z2s(0, dim(k) - r2[k] - r2[k + 1]));
            if (progress) progress(k, out.back());
        }
    }
    return out;
}

AbelianGroup homology_at(const IntMatrix& boundary_out, const IntMatrix& boundary_in) {
    if (boundary_out.cols() != boundary_in.rows())
        throw std::invalid_argument("homology_at: middle module dimensions disagree");
    if (!(boundary_out * boundary_in).is_zero())
        throw CompositionNotZero("homology_at: boundary_out * boundary_in != 0");
    const int mid = boundary_out.cols();
    const int rank_out = integer_rank(boundary_out);
    SmithResult in = smith_normal_form(boundary_in);
    // im(boundary_in) is saturatedly contained in ker(boundary_out), so the
    // quotient splits off the full torsion of the cokernel of boundary_in.
    return AbelianGroup(mid - rank_out - in.rank(), in.torsion_divisors());
}

std::vector<AbelianGroup> cohomology_with_coefficients(const ChainComplex& c, Coefficients k) {
    return c.cohomology(k);
}

}  // namespace su2hom
