#include <vector>

#include "doctest.h"
#include "su2hom/errors.hpp"
#include "su2hom/restriction.hpp"

using namespace su2hom;

namespace {

// every subset of {1..n} as a sorted index list
std::vector<std::vector<int>> subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int i = 1; i <= n; ++i)
            if (mask & (1 << (i - 1))) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

std::vector<std::vector<std::pair<int, int>>> pair_subsets(int n) {
    std::vector<std::pair<int, int>> all;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) all.emplace_back(i, j);
    std::vector<std::vector<std::pair<int, int>>> out;
    for (int mask = 0; mask < (1 << all.size()); ++mask) {
        std::vector<std::pair<int, int>> s;
        for (size_t k = 0; k < all.size(); ++k)
            if (mask & (1 << k)) s.push_back(all[k]);
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("generator images over a fixed sign vector") {
    const SignVector a{1, -1, 1};  // a_2 = -1
    CHECK(restrict_generator(GeneratorSymbol::u(), a) == RestrictionImage::U);
    CHECK(restrict_generator(GeneratorSymbol::v(1), a) == RestrictionImage::Zero);
    CHECK(restrict_generator(GeneratorSymbol::v(2), a) == RestrictionImage::U);
    CHECK(restrict_generator(GeneratorSymbol::x(1, 2), a) == RestrictionImage::U);
    CHECK(restrict_generator(GeneratorSymbol::x(1, 3), a) == RestrictionImage::Zero);
    CHECK_THROWS_AS(restrict_generator(GeneratorSymbol::w(1), a), UnsupportedGenerator);
    CHECK_THROWS_AS(restrict_generator(GeneratorSymbol::u(), SignVector{1, 0}),
                    std::invalid_argument);
}

TEST_CASE("column enumeration is lexicographic with +1 first") {
    CHECK(sign_vector_at(3, 0) == SignVector{1, 1, 1});
    CHECK(sign_vector_at(3, 1) == SignVector{1, 1, -1});
    CHECK(sign_vector_at(3, 5) == SignVector{-1, 1, -1});
    CHECK(sign_vector_at(3, 7) == SignVector{-1, -1, -1});
}

TEST_CASE("restriction matrix in rank one and two") {
    Mod2Matrix m1 = restriction_matrix(1);
    REQUIRE(m1.rows() == 2);
    REQUIRE(m1.cols() == 2);
    CHECK(m1.get(0, 0));  // u restricts to u everywhere
    CHECK(m1.get(0, 1));
    CHECK_FALSE(m1.get(1, 0));  // v_1 dies at a = (+1)
    CHECK(m1.get(1, 1));

    CHECK(restriction_matrix(2).rank() == 4);
}

TEST_CASE("the restriction matrix has full row rank for all tested n") {
    for (int n = 1; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(independence_check(n));
    }
}

TEST_CASE("parity counting") {
    const IndexData data{{1}, {{1, 2}}};
    CHECK(parity_count(data, {1, 1}) == 0);
    CHECK(parity_count(data, {1, -1}) == 1);
    CHECK(parity_count(data, {-1, 1}) == 2);
    CHECK(parity_count(data, {-1, -1}) == 2);  // the pair counts once, not per end
}

TEST_CASE("exhaustive search returns the first odd-parity sign vector") {
    CHECK(exhaustive_choose_a({{1}, {}}, 2) == SignVector{-1, 1});
    CHECK(exhaustive_choose_a({{1, 2}, {{1, 2}}}, 2) == SignVector{-1, -1});
    // duplicated pair cancels itself mod 2: nothing separates it
    CHECK_FALSE(exhaustive_choose_a({{}, {{1, 2}, {1, 2}}}, 2).has_value());
}

TEST_CASE("frozen case-analysis picks") {
    auto r = choose_a({{1}, {}}, 1);
    CHECK(r.a == SignVector{-1});
    CHECK_FALSE(r.used_fallback);

    r = choose_a({{1}, {{1, 2}}}, 2);
    CHECK(r.a == SignVector{1, -1});
    CHECK_FALSE(r.used_fallback);

    r = choose_a({{1, 2}, {{1, 2}}}, 2);
    CHECK(r.a == SignVector{-1, -1});
    CHECK_FALSE(r.used_fallback);

    r = choose_a({{}, {{1, 2}}}, 2);  // empty I goes through the oracle
    CHECK(r.a == SignVector{1, -1});
    CHECK(r.used_fallback);

    CHECK_THROWS_AS(choose_a({{}, {}}, 3), EmptyInput);
}

TEST_CASE("case analysis sweeps every index configuration, n = 3") {
    for (const auto& I : subsets(3)) {
        for (const auto& J : pair_subsets(3)) {
            if (I.empty() && J.empty()) continue;
            CAPTURE(I.size());
            CAPTURE(J.size());
            const IndexData data{I, J};
            const auto oracle = exhaustive_choose_a(data, 3);
            if (!oracle) continue;  // nothing to separate (never hit here)
            const auto r = choose_a(data, 3);
            CHECK(parity_count(data, r.a) % 2 == 1);
            if (!I.empty()) CHECK_FALSE(r.used_fallback);
        }
    }
}
