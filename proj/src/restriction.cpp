#include "su2hom/restriction.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "su2hom/errors.hpp"

namespace su2hom {

namespace {

void check_signs(const SignVector& a) {
    for (int s : a) {
        if (s != 1 && s != -1) throw std::invalid_argument("sign vector entries must be +-1");
    }
}

bool negative(const SignVector& a, int i) {
    if (i < 1 || i > static_cast<int>(a.size())) throw std::invalid_argument("index out of range");
    return a[i - 1] == -1;
}

}  // namespace

RestrictionImage restrict_generator(const GeneratorSymbol& g, const SignVector& a) {
    check_signs(a);
    using Kind = GeneratorSymbol::Kind;
    switch (g.kind) {
        case Kind::U:
            return RestrictionImage::U;
        case Kind::V:
            return negative(a, g.idx[0]) ? RestrictionImage::U : RestrictionImage::Zero;
        case Kind::X:
            return (negative(a, g.idx[0]) || negative(a, g.idx[1])) ? RestrictionImage::U
                                                                    : RestrictionImage::Zero;
        default:
            throw UnsupportedGenerator("restriction is only defined on u, v(i), x(i,j)");
    }
}

SignVector sign_vector_at(int n, int column) {
    // Lexicographic with +1 < -1: bit (n-i) of the column index set means a_i = -1.
    SignVector a(n, 1);
    for (int i = 1; i <= n; ++i) {
        if ((column >> (n - i)) & 1) a[i - 1] = -1;
    }
    return a;
}

Mod2Matrix restriction_matrix(int n) {
    if (n < 1) throw std::invalid_argument("restriction_matrix needs n >= 1");
    std::vector<GeneratorSymbol> rows;
    rows.push_back(GeneratorSymbol::u());
    for (int i = 1; i <= n; ++i) rows.push_back(GeneratorSymbol::v(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) rows.push_back(GeneratorSymbol::x(i, j));

    const int cols = 1 << n;
    Mod2Matrix m(static_cast<int>(rows.size()), cols);
    for (int c = 0; c < cols; ++c) {
        const SignVector a = sign_vector_at(n, c);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (restrict_generator(rows[r], a) == RestrictionImage::U)
                m.set(static_cast<int>(r), c, true);
        }
    }
    return m;
}

bool independence_check(int n) {
    Mod2Matrix m = restriction_matrix(n);
    const int expected = 1 + n + n * (n - 1) / 2;
    assert(m.rows() == expected);
    return m.rank() == expected;
}

int parity_count(const IndexData& data, const SignVector& a) {
    check_signs(a);
    int count = 0;
    for (int i : data.I)
        if (negative(a, i)) ++count;
    for (const auto& [i, j] : data.J)
        if (negative(a, i) || negative(a, j)) ++count;
    return count;
}

std::optional<SignVector> exhaustive_choose_a(const IndexData& data, int n) {
    const int cols = 1 << n;
    for (int c = 0; c < cols; ++c) {
        SignVector a = sign_vector_at(n, c);
        if (parity_count(data, a) % 2 == 1) return a;
    }
    return std::nullopt;
}

namespace {

// m_k = 1 + #{pairs in J meeting k}: the parity change caused by flipping
// a_k to -1 alone, counting the v(k) row plus every incident x row.
int incidence(const IndexData& data, int k) {
    int m = 1;
    for (const auto& [i, j] : data.J)
        if (i == k || j == k) ++m;
    return m;
}

}  // namespace

ChooseResult choose_a(const IndexData& data, int n) {
    if (data.I.empty() && data.J.empty()) throw EmptyInput("no indices to separate");
    for (int i : data.I) {
        if (i < 1 || i > n) throw std::invalid_argument("I index out of range");
    }
    for (const auto& [i, j] : data.J) {
        if (i < 1 || j < 1 || i > n || j > n || i == j)
            throw std::invalid_argument("J pair out of range");
    }

    std::vector<int> I = data.I;
    std::sort(I.begin(), I.end());

    std::optional<SignVector> pick;
    if (!I.empty()) {
        // Case 1: some k in I already has odd incidence.
        for (int k : I) {
            if (incidence(data, k) % 2 == 1) {
                SignVector a(n, 1);
                a[k - 1] = -1;
                pick = a;
                break;
            }
        }
        if (!pick) {
            // Case 2a: a pair of J lying inside I; flip both ends.  The two
            // odd incidences cancel except on their shared pair rows.
            std::optional<std::pair<int, int>> inside;
            for (const auto& pr : data.J) {
                auto [i, j] = std::minmax(pr.first, pr.second);
                if (std::binary_search(I.begin(), I.end(), i) &&
                    std::binary_search(I.begin(), I.end(), j)) {
                    if (!inside || std::make_pair(i, j) < *inside) inside = std::make_pair(i, j);
                }
            }
            if (inside) {
                SignVector a(n, 1);
                a[inside->first - 1] = -1;
                a[inside->second - 1] = -1;
                pick = a;
            } else {
                // Case 2b: pair min(I) with its smallest J-partner l.
                const int k1 = I.front();
                std::optional<int> partner;
                for (const auto& pr : data.J) {
                    if (pr.first == k1 || pr.second == k1) {
                        const int other = pr.first == k1 ? pr.second : pr.first;
                        if (!partner || other < *partner) partner = other;
                    }
                }
                if (partner) {
                    SignVector a(n, 1);
                    if ((incidence(data, *partner) - 1) % 2 == 1) {
                        a[*partner - 1] = -1;  // l alone, discounting the (k1,l) pair
                    } else {
                        a[*partner - 1] = -1;
                        a[k1 - 1] = -1;
                    }
                    pick = a;
                }
            }
        }
    }

    if (pick && parity_count(data, *pick) % 2 == 1) {
        ChooseResult out{*pick, false};
#ifndef NDEBUG
        assert(exhaustive_choose_a(data, n).has_value());
#endif
        return out;
    }

    // I empty, no branch applied, or a branch that failed its parity check:
    // fall back to the exhaustive search.
    auto witness = exhaustive_choose_a(data, n);
    if (!witness) throw InsufficientData("no sign vector gives odd parity");
    return ChooseResult{*witness, true};
}

}  // namespace su2hom
