#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "su2hom/mod2.hpp"
#include "su2hom/smith.hpp"

using namespace su2hom;

namespace {

IntMatrix dense(const std::vector<std::vector<int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    return m;
}

std::vector<Int> factors(const IntMatrix& m) { return smith_normal_form(m).invariant_factors(); }

// Random elementary row/column operations keep the invariant factors fixed.
IntMatrix scrambled(IntMatrix m, std::mt19937& rng, int ops) {
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int t = 0; t < ops; ++t) {
        const bool row_op = rng() & 1;
        const int n = row_op ? m.rows() : m.cols();
        if (n < 2) continue;
        int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
        if (i == j) continue;
        const Int c = coef(rng);
        if (row_op) {
            const std::map<int, Int> source = m.row(j);
            for (const auto& [col, v] : source) m.add_to(i, col, c * v);
        } else {
            IntMatrix t2 = m.transposed();
            for (const auto& [r, v] : t2.row(j)) m.add_to(r, i, c * v);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("smith normal form of small diagonal and dense matrices") {
    CHECK(factors(dense({{2, 0}, {0, 3}})) == std::vector<Int>{1, 6});
    CHECK(factors(dense({{4, 0}, {0, 6}})) == std::vector<Int>{2, 12});
    // Worked example: |det| = 144, gcd of entries 2, gcd of 2x2 minors 12.
    CHECK(factors(dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})) == std::vector<Int>{2, 6, 12});
}

TEST_CASE("transform accumulation reproduces S exactly") {
    const IntMatrix m = dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    SmithResult r = smith_normal_form(m, true);
    REQUIRE(r.U.has_value());
    REQUIRE(r.V.has_value());
    CHECK((*r.U) * m * (*r.V) == r.S);
    CHECK(r.S == smith_normal_form(m).S);
    CHECK(r.torsion_divisors() == std::vector<Int>{2, 6, 12});
}

TEST_CASE("degenerate shapes") {
    CHECK(smith_normal_form(IntMatrix(0, 5)).rank() == 0);
    CHECK(smith_normal_form(IntMatrix(5, 0)).rank() == 0);
    CHECK(smith_normal_form(IntMatrix(3, 4)).rank() == 0);  // zero matrix
    CHECK(factors(IntMatrix::identity(4)) == std::vector<Int>{1, 1, 1, 1});
    CHECK(integer_rank(dense({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}})) == 2);
}

TEST_CASE("invariant factors survive unimodular change of basis") {
    std::mt19937 rng(12345);
    const IntMatrix base = dense({{6, 0, 0, 0}, {0, 10, 0, 0}, {0, 0, 15, 0}});
    const auto expected = factors(base);  // 1, 30, 30 by gcd/lcm towers
    CHECK(expected == std::vector<Int>{1, 30, 30});
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix m = scrambled(base, rng, 25);
        CHECK(factors(m) == expected);
    }
}

TEST_CASE("entries beyond machine word size") {
    const Int big = Int(1) << 100;
    IntMatrix m(2, 2);
    m.set(0, 0, big);
    m.set(1, 1, 3);
    CHECK(factors(m) == std::vector<Int>{1, 3 * big});
}

TEST_CASE("rank over GF(2)") {
    CHECK(mod2_rank(dense({{2, 1}, {0, 3}})) == 1);
    CHECK(mod2_rank(dense({{2, 4}, {6, 8}})) == 0);

    // Path incidence pattern across the 64-bit word boundary: rows e_r + e_{r+1}.
    Mod2Matrix p(99, 100);
    for (int r = 0; r < 99; ++r) {
        p.set(r, r, true);
        p.set(r, r + 1, true);
    }
    CHECK(p.rank() == 99);
}
