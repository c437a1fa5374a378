#include <vector>

#include "doctest.h"
#include "su2hom/closed_form.hpp"
#include "su2hom/errors.hpp"

using namespace su2hom;

namespace {
const AbelianGroup Z = AbelianGroup::free(1);
const AbelianGroup O = AbelianGroup::trivial();
}

TEST_CASE("binomial boundary behaviour") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(10, 4) == 210);
}

TEST_CASE("cohomology tables in low rank") {
    // Desingularized model, n = 2.
    CHECK(blowup_cohomology(2, 0) == Z);
    CHECK(blowup_cohomology(2, 1) == O);
    CHECK(blowup_cohomology(2, 2) == AbelianGroup::z2s(1, 3));
    CHECK(blowup_cohomology(2, 3) == AbelianGroup::free(2));
    CHECK(blowup_cohomology(2, 4) == AbelianGroup::z2s(0, 1));
    CHECK(blowup_cohomology(2, 5) == O);

    // Collapsed model, n = 2 and n = 3.
    CHECK(yn_cohomology(2, 2) == Z);
    CHECK(yn_cohomology(2, 3) == AbelianGroup::free(2));
    CHECK(yn_cohomology(2, 4) == AbelianGroup::z2s(0, 1));
    CHECK(yn_cohomology(3, 3) == AbelianGroup::z2s(3, 1));
    CHECK(yn_cohomology(3, 4) == AbelianGroup::z2s(0, 4));
    CHECK(yn_cohomology(3, 5) == Z);
    CHECK(yn_cohomology(3, 6) == O);
}

TEST_CASE("graded ranks of cohomology match the K-theory ranks") {
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        long long even_free = 0, odd_free = 0, coh_torsion = 0;
        long long beven_free = 0, bodd_free = 0, bcoh_torsion = 0;
        for (int i = 0; i <= n + 2; ++i) {
            const auto y = yn_cohomology(n, i);
            const auto b = blowup_cohomology(n, i);
            (i % 2 ? odd_free : even_free) += y.free_rank;
            (i % 2 ? bodd_free : beven_free) += b.free_rank;
            coh_torsion += y.z2_count();
            bcoh_torsion += b.z2_count();
        }
        const auto y0 = yn_ktheory(n, Parity::Even);
        const auto y1 = yn_ktheory(n, Parity::Odd);
        const auto b0 = blowup_ktheory(n, Parity::Even);
        const auto b1 = blowup_ktheory(n, Parity::Odd);

        CHECK(even_free == y0.free_rank);
        CHECK(odd_free == y1.free_rank);
        CHECK(beven_free == b0.free_rank);
        CHECK(bodd_free == b1.free_rank);
        CHECK(y0.free_rank == (1LL << (n - 1)));
        CHECK(b1.torsion.empty());

        // All torsion is exponent two, and the total over the grading agrees.
        CHECK(coh_torsion == y0.z2_count() + y1.z2_count());
        CHECK(bcoh_torsion == b0.z2_count() + b1.z2_count());
        CHECK(b0.z2_count() == (1LL << n));
    }
}

TEST_CASE("mod-2 Betti numbers through universal coefficients") {
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        // Degree 3: n + (2^n - 1 - n - C(n,2)) + C(n+1,3), exponential in n.
        CHECK(yn_mod2_betti(n, 3) ==
              (1LL << n) - 1 - binomial(n, 2) + binomial(n + 1, 3));
        long long total = 0, btotal = 0;
        for (int i = 0; i <= n + 2; ++i) {
            total += yn_mod2_betti(n, i);
            btotal += blowup_mod2_betti(n, i);
        }
        // Poincare series of the mod-2 cohomology at t = 1: free plus twice
        // the torsion count, summed over the grading.
        long long expected = 0, bexpected = 0;
        for (int i = 0; i <= n + 2; ++i) {
            expected += yn_cohomology(n, i).free_rank + 2 * yn_cohomology(n, i).z2_count();
            bexpected += blowup_cohomology(n, i).free_rank + 2 * blowup_cohomology(n, i).z2_count();
        }
        CHECK(total == expected);
        CHECK(btotal == bexpected);
    }
    CHECK(yn_mod2_betti(1, 3) == 1);
    CHECK(yn_mod2_betti(2, 3) == 3);
    CHECK(yn_mod2_betti(3, 3) == 8);
}

TEST_CASE("polynomial growth detector") {
    // Free rank of degree-3 cohomology grows linearly in the number of factors.
    std::vector<long long> linear;
    for (int n = 1; n <= 8; ++n) linear.push_back(yn_cohomology(n, 3).free_rank);
    CHECK(polynomial_growth_test(linear, 1));
    CHECK_FALSE(polynomial_growth_test(linear, 0));

    // The full mod-2 Betti number in degree 3 has a 2^n term: no polynomial
    // degree certifies it.
    std::vector<long long> betti;
    for (int n = 1; n <= 12; ++n) betti.push_back(yn_mod2_betti(n, 3));
    for (int d = 0; d <= 6; ++d) {
        CAPTURE(d);
        CHECK_FALSE(polynomial_growth_test(betti, d));
    }

    CHECK(polynomial_growth_test({7, 7, 7}, 0));
    CHECK_THROWS_AS(polynomial_growth_test({1, 2}, 1), InsufficientData);
}

TEST_CASE("group tables carry rows and self-describing formulas") {
    GroupTable t = make_group_table(Space::Yn, Theory::CohomologyZ, 3);
    CHECK(t.space == "yn");
    CHECK(t.theory == "cohomology-z");
    CHECK(t.rows.size() == 6);  // degrees 0..5
    for (const auto& row : t.rows) {
        CAPTURE(row.degree);
        CHECK(row.group == yn_cohomology(3, row.degree));
        CHECK_FALSE(row.formula.empty());
    }

    GroupTable k = make_group_table(Space::Blowup, Theory::K, 4);
    CHECK(k.rows.size() == 2);
    CHECK(k.rows[0].group == blowup_ktheory(4, Parity::Even));
    CHECK(k.rows[1].group == blowup_ktheory(4, Parity::Odd));
}
