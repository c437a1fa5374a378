#include <vector>

#include "doctest.h"
#include "su2hom/closed_form.hpp"
#include "su2hom/errors.hpp"
#include "su2hom/spaces.hpp"

using namespace su2hom;

namespace {

const AbelianGroup Z = AbelianGroup::free(1);
const AbelianGroup Z2 = AbelianGroup::z2s(0, 1);
const AbelianGroup O = AbelianGroup::trivial();

int total_cells(const ChainComplex& c) {
    int t = 0;
    for (int d : c.dims) t += d;
    return t;
}

std::vector<int> mod2_dims(const ChainComplex& c) {
    std::vector<int> out;
    for (const auto& g : c.cohomology(Coefficients::Z2)) out.push_back(g.z2_count());
    return out;
}

// Universal coefficients from integral homology: dim H^k(X; Z2) counts the
// free rank plus 2-torsion of H_k plus 2-torsion of H_{k-1}.
std::vector<int> uct_dims(const std::vector<AbelianGroup>& h) {
    std::vector<int> out(h.size());
    for (size_t k = 0; k < h.size(); ++k) {
        out[k] = h[k].free_rank + h[k].z2_count() + (k ? h[k - 1].z2_count() : 0);
    }
    return out;
}

}  // namespace

TEST_CASE("equivariant building blocks validate and have the right homology") {
    auto s2 = sphere_complex();
    auto s1 = circle_complex();
    s2.validate();
    s1.validate();
    CHECK(s2.underlying().homology_all() == std::vector<AbelianGroup>{Z, O, Z});
    CHECK(s1.underlying().homology_all() == std::vector<AbelianGroup>{Z, Z});

    auto prod = tensor(s2, s1);
    prod.validate();
    CHECK(total_cells(prod.underlying()) == 24);
    CHECK(prod.underlying().homology_all() == std::vector<AbelianGroup>{Z, Z, Z, Z});

    auto torus = tensor(s1, s1);
    torus.validate();
    CHECK(torus.underlying().homology_all() == std::vector<AbelianGroup>{Z, AbelianGroup::free(2), Z});
}

TEST_CASE("orbit space of the free sphere action is the projective plane") {
    ChainComplex rp2 = quotient_by_gamma(sphere_complex());
    rp2.validate();
    CHECK(rp2.homology_all() == std::vector<AbelianGroup>{Z, Z2, O});
    CHECK(rp2.cohomology(Coefficients::Z) == std::vector<AbelianGroup>{Z, O, Z2});
    CHECK(mod2_dims(rp2) == std::vector<int>{1, 1, 1});

    // The reflection circle has fixed cells, so its quotient is rejected.
    CHECK_THROWS_AS(quotient_by_gamma(circle_complex()), ActionNotFree);
}

TEST_CASE("desingularized model, one circle factor") {
    ChainComplex b1 = blowup_complex(1);
    b1.validate();
    CHECK(b1.dims == std::vector<int>{2, 4, 4, 2});
    CHECK(b1.euler_characteristic() == 0);
    const auto h = b1.homology_all();
    CHECK(h == std::vector<AbelianGroup>{Z, AbelianGroup::z2s(0, 2), O, Z});
    CHECK(b1.cohomology(Coefficients::Z) ==
          std::vector<AbelianGroup>{Z, O, AbelianGroup::z2s(0, 2), Z});
    CHECK(mod2_dims(b1) == uct_dims(h));
}

TEST_CASE("collapsed model, one circle factor, is the three-sphere") {
    ChainComplex y1 = collapse_to_yn(1);
    y1.validate();
    CHECK(y1.dims == std::vector<int>{2, 2, 2, 2});
    CHECK(y1.homology_all() == std::vector<AbelianGroup>{Z, O, O, Z});
    CHECK(y1.cohomology(Coefficients::Z) == std::vector<AbelianGroup>{Z, O, O, Z});
}

TEST_CASE("cell counts, Euler characteristic, and universal coefficients, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        ChainComplex b = blowup_complex(n);
        b.validate();
        CHECK(total_cells(b) == 3 * (1 << (2 * n)));
        CHECK(b.top_degree() == n + 2);
        CHECK(b.euler_characteristic() == 0);
        CHECK(mod2_dims(b) == uct_dims(b.homology_all()));

        ChainComplex y = collapse_to_yn(n);
        y.validate();
        CHECK(y.euler_characteristic() == 0);
        CHECK(mod2_dims(y) == uct_dims(y.homology_all()));
    }
}

TEST_CASE("oracle matches the closed forms in small rank") {
    for (int n = 1; n <= 2; ++n) {
        CAPTURE(n);
        const auto hb = blowup_complex(n).cohomology(Coefficients::Z);
        const auto hy = collapse_to_yn(n).cohomology(Coefficients::Z);
        for (int i = 0; i <= n + 2; ++i) {
            CAPTURE(i);
            CHECK(hb[i] == blowup_cohomology(n, i));
            CHECK(hy[i] == yn_cohomology(n, i));
        }
    }
}

TEST_CASE("guard rejects oversized oracle runs") {
    CHECK_THROWS_AS(blowup_complex(7), GuardExceeded);
    CHECK_THROWS_AS(collapse_to_yn(9, 8), GuardExceeded);
    CHECK_NOTHROW(blowup_complex(7, 7));
}

TEST_CASE("projective plane with local coefficients") {
    CHECK(twisted_rp2_cohomology(false) == std::array<AbelianGroup, 3>{Z, O, Z2});
    CHECK(twisted_rp2_cohomology(true) == std::array<AbelianGroup, 3>{O, Z2, Z});

    // Rank-two module with the involution swapping the coordinates: the
    // invariant line contributes in degree 0, the anti-invariant one in
    // degree 2, and nothing is left in between.
    IntMatrix swap(2, 2);
    swap.set(0, 1, 1);
    swap.set(1, 0, 1);
    CHECK(rp2_local_cohomology(swap) == std::array<AbelianGroup, 3>{Z, O, Z});
}
