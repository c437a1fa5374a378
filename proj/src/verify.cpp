#include "su2hom/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "su2hom/closed_form.hpp"
#include "su2hom/equivariant_kt.hpp"
#include "su2hom/restriction.hpp"
#include "su2hom/ring.hpp"
#include "su2hom/spaces.hpp"

namespace su2hom {

namespace {

// Collects expect() outcomes and renders a one-line verdict.
struct Tally {
    int checked = 0;
    std::vector<std::string> fails;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && fails.size() < 4) fails.push_back(what);
        else if (!ok) ++hidden;
    }
    int hidden = 0;

    CheckResult result(const std::string& name, int n, const std::string& summary) const {
        CheckResult r;
        r.name = name;
        r.n = n;
        r.pass = fails.empty();
        if (r.pass) {
            r.detail = summary + " (" + std::to_string(checked) + " comparisons)";
        } else {
            std::string d = "FAILED:";
            for (const auto& f : fails) d += " [" + f + "]";
            if (hidden) d += " and " + std::to_string(hidden) + " more";
            r.detail = d;
        }
        return r;
    }
};

std::function<void(int, const AbelianGroup&)> degree_stream(const ProgressFn& progress,
                                                            const std::string& prefix) {
    if (!progress) return {};
    return [progress, prefix](int k, const AbelianGroup& g) {
        progress(prefix + " H^" + std::to_string(k) + " = " + g.to_string());
    };
}

int z2_cohomology_dim(const std::vector<AbelianGroup>& h, int k) {
    // universal coefficients from integral homology
    const int below = k > 0 ? h[k - 1].z2_count() : 0;
    return h[k].free_rank + h[k].z2_count() + below;
}

// local inversion count, independent of the ring engine's sign convention
int inversion_sign(const std::vector<int>& seq) {
    int inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

CheckResult check_blowup_cohomology(int n, int guard, const ProgressFn& progress) {
    Tally t;
    const auto oracle =
        blowup_complex(n, guard).cohomology(Coefficients::Z, degree_stream(progress, "blowup"));
    for (int i = 0; i <= n + 2; ++i) {
        const AbelianGroup formula = blowup_cohomology(n, i);
        t.expect(oracle[i] == formula, "H^" + std::to_string(i) + " oracle " +
                                           oracle[i].to_string() + " != formula " +
                                           formula.to_string());
    }
    return t.result("blowup-cohomology", n, "oracle = closed form in degrees 0.." +
                                                std::to_string(n + 2));
}

CheckResult check_yn_cohomology(int n, int guard, const ProgressFn& progress) {
    Tally t;
    const auto oracle =
        collapse_to_yn(n, guard).cohomology(Coefficients::Z, degree_stream(progress, "yn"));
    for (int i = 0; i <= n + 2; ++i) {
        const AbelianGroup formula = yn_cohomology(n, i);
        t.expect(oracle[i] == formula, "H^" + std::to_string(i) + " oracle " +
                                           oracle[i].to_string() + " != formula " +
                                           formula.to_string());
    }
    return t.result("yn-cohomology", n, "oracle = closed form in degrees 0.." +
                                            std::to_string(n + 2));
}

CheckResult check_uct(int n, int guard, const ProgressFn& progress) {
    Tally t;
    std::string b3;
    for (bool collapsed : {false, true}) {
        const ChainComplex c = collapsed ? collapse_to_yn(n, guard) : blowup_complex(n, guard);
        const std::string tag = collapsed ? "yn" : "blowup";
        const auto mod2 = c.cohomology(Coefficients::Z2, degree_stream(progress, tag + " mod2"));
        const auto integral = c.homology_all();
        for (int k = 0; k <= n + 2; ++k) {
            const int direct = mod2[k].z2_count();
            const int via_uct = z2_cohomology_dim(integral, k);
            const long long formula = collapsed ? yn_mod2_betti(n, k) : blowup_mod2_betti(n, k);
            t.expect(direct == via_uct, tag + " b" + std::to_string(k) + " direct " +
                                            std::to_string(direct) + " != UCT " +
                                            std::to_string(via_uct));
            t.expect(direct == formula, tag + " b" + std::to_string(k) + " oracle " +
                                            std::to_string(direct) + " != formula " +
                                            std::to_string(formula));
        }
        if (collapsed) b3 = std::to_string(mod2[3].z2_count());
    }
    return t.result("uct", n, "mod-2 Betti numbers agree; yn b3(Z2) = " + b3);
}

CheckResult check_euler(int n, int guard, const ProgressFn&) {
    Tally t;
    for (bool collapsed : {false, true}) {
        const ChainComplex c = collapsed ? collapse_to_yn(n, guard) : blowup_complex(n, guard);
        const std::string tag = collapsed ? "yn" : "blowup";
        t.expect(c.euler_characteristic() == 0, tag + " cell count Euler != 0");
        int alt = 0, sign = 1;
        for (const AbelianGroup& h : c.homology_all()) {
            alt += sign * h.free_rank;
            sign = -sign;
        }
        t.expect(alt == 0, tag + " homology Euler != 0");
    }
    return t.result("euler", n, "Euler characteristic vanishes both ways");
}

CheckResult check_ktheory_counts(int n) {
    Tally t;
    const auto B = RingPresentation::blowup_ring(n);
    const auto Y = RingPresentation::yn_ring(n);
    for (Parity p : {Parity::Even, Parity::Odd}) {
        const std::string tag = p == Parity::Even ? "even" : "odd";
        t.expect(B.additive_structure(p) == blowup_ktheory(n, p),
                 "blowup " + tag + " " + B.additive_structure(p).to_string() + " != " +
                     blowup_ktheory(n, p).to_string());
        t.expect(Y.additive_structure(p) == yn_ktheory(n, p),
                 "yn " + tag + " " + Y.additive_structure(p).to_string() + " != " +
                     yn_ktheory(n, p).to_string());
    }
    return t.result("ktheory-counts", n, "presented bases match the K-group closed forms");
}

CheckResult check_ring_relations(int n) {
    using Kind = GeneratorSymbol::Kind;
    Tally t;
    const auto R = RingPresentation::blowup_ring(n);

    auto mono = [&](const RingPresentation& ring, Series s, int head,
                    std::vector<std::pair<int, int>> pairs) {
        RingElement e = ring.zero();
        e.coeffs[Monomial{s, head, std::move(pairs)}] = 1;
        return e;
    };

    const auto u = R.generator(GeneratorSymbol::u());
    std::vector<RingElement> torsion_odd{u};
    for (int i = 1; i <= n; ++i) torsion_odd.push_back(R.generator(GeneratorSymbol::v(i)));
    for (int i = 1; i <= n; ++i) torsion_odd.push_back(R.generator(GeneratorSymbol::w(i)));

    for (int i = 1; i <= n; ++i)
        t.expect(R.generator(GeneratorSymbol::x(i, i)).is_zero(), "x(i,i) != 0");
    for (std::size_t a = 0; a < torsion_odd.size(); ++a)
        for (std::size_t b = 0; b < torsion_odd.size(); ++b)
            t.expect(R.multiply(torsion_odd[a], torsion_odd[b]).is_zero(),
                     "u/v/w product not zero");

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const auto xij = R.generator(GeneratorSymbol::x(i, j));
            t.expect(R.generator(GeneratorSymbol::x(j, i)) == R.scale(-1, xij),
                     "antisymmetry x(j,i) = -x(i,j)");
            t.expect(R.multiply(xij, xij) == R.multiply(u, xij), "x^2 = u x");
            t.expect(R.scale(2, R.multiply(u, xij)).is_zero(), "2 u x != 0");
            for (int k = 1; k <= n; ++k) {
                const bool meets = (k == i || k == j);
                const auto vk = R.generator(GeneratorSymbol::v(k));
                const auto wk = R.generator(GeneratorSymbol::w(k));
                t.expect(R.multiply(vk, xij).is_zero() == meets, "v x repeated-index rule");
                t.expect(R.multiply(wk, xij).is_zero() == meets, "w x repeated-index rule");
                if (!meets) {
                    // normalization to the smallest head; odd part keeps a sign
                    std::vector<int> s{k, i, j};
                    std::sort(s.begin(), s.end());
                    t.expect(R.multiply(vk, xij) == mono(R, Series::V, s[0], {{s[1], s[2]}}),
                             "v-head normalization");
                    t.expect(R.multiply(wk, xij) ==
                                 R.scale(inversion_sign({k, i, j}),
                                         mono(R, Series::W, s[0], {{s[1], s[2]}})),
                             "w-head normalization with orientation sign");
                }
            }
        }
    }

    // orientation signs on disjoint free products, against a local inversion count
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    if (k == i || k == j || l == i || l == j) continue;
                    std::vector<int> s{i, j, k, l};
                    std::sort(s.begin(), s.end());
                    const auto lhs = R.multiply(R.generator(GeneratorSymbol::x(i, j)),
                                                R.generator(GeneratorSymbol::x(k, l)));
                    const auto rhs = R.scale(inversion_sign({i, j, k, l}),
                                             mono(R, Series::X, -1, {{s[0], s[1]}, {s[2], s[3]}}));
                    t.expect(lhs == rhs, "orientation sign on x(i,j) x(k,l)");
                }

    // overlapping distinct pairs stay atoms and die on decoration
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int l = j + 1; l <= n; ++l) {
                const auto p = R.multiply(R.generator(GeneratorSymbol::x(i, j)),
                                          R.generator(GeneratorSymbol::x(j, l)));
                t.expect(!p.determined() && p.coeffs.empty(), "overlap not an atom");
                t.expect(R.multiply(p, u).is_zero(), "atom * u != 0");
                t.expect(R.scale(2, p).is_zero(), "2 * atom != 0");
            }

    // collapsed space
    const auto Y = RingPresentation::yn_ring(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const auto aij = Y.generator({Kind::A, {i, j}});
            t.expect(Y.multiply(aij, aij).is_zero(), "a^2 != 0");
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    const auto akl = Y.generator({Kind::A, {k, l}});
                    const bool disjoint = k != i && k != j && l != i && l != j;
                    const auto prod = Y.multiply(aij, akl);
                    if (std::make_pair(i, j) == std::make_pair(k, l)) continue;
                    if (disjoint) {
                        std::vector<int> s{i, j, k, l};
                        std::sort(s.begin(), s.end());
                        t.expect(prod == Y.scale(4 * inversion_sign({i, j, k, l}),
                                                 Y.generator({Kind::D, s})),
                                 "a a != 4 d on disjoint indices");
                    } else {
                        t.expect(prod.is_zero(), "overlapping a a != 0");
                    }
                }
        }
    if (n >= 3) {
        const auto b = Y.generator({Kind::B, {1, 2}});
        const auto c = Y.generator({Kind::C, {1, 2, 3}});
        t.expect(Y.multiply(b, c).is_zero(), "b c != 0");
    }
    for (int i = 1; i <= Y.f_count(); ++i) {
        const auto fi = Y.generator(GeneratorSymbol::f(i));
        t.expect(Y.add(fi, fi).is_zero(), "2 f != 0");
        t.expect(Y.multiply(fi, Y.one()) == fi, "f * 1 != f");
        for (const auto& g : Y.generators())
            t.expect(Y.multiply(fi, Y.generator(g)).is_zero(), "f * generator != 0");
    }

    // associativity and distributivity on fixed-seed random elements
    for (const RingPresentation* ring : {&R, &Y}) {
        std::vector<Monomial> all = ring->basis(Parity::Even);
        for (const Monomial& m : ring->basis(Parity::Odd)) all.push_back(m);
        std::mt19937 rng(4242);
        std::uniform_int_distribution<int> coef(-2, 2);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        auto rnd = [&]() {
            RingElement e = ring->zero();
            for (int parts = 0; parts < 3; ++parts) {
                RingElement m = ring->zero();
                m.coeffs[all[pick(rng)]] = 1;
                e = ring->add(e, ring->scale(coef(rng), m));
            }
            return e;
        };
        for (int trial = 0; trial < 15; ++trial) {
            const auto a = rnd(), b = rnd(), c = rnd();
            t.expect(ring->multiply(ring->multiply(a, b), c) ==
                         ring->multiply(a, ring->multiply(b, c)),
                     "associativity");
            t.expect(ring->multiply(ring->add(a, b), c) ==
                         ring->add(ring->multiply(a, c), ring->multiply(b, c)),
                     "distributivity");
        }
        // graded commutativity across the whole monomial basis
        for (const Monomial& ma : all)
            for (const Monomial& mb : all) {
                RingElement a = ring->zero(), b = ring->zero();
                a.coeffs[ma] = 1;
                b.coeffs[mb] = 1;
                const int sign =
                    (ma.parity() == Parity::Odd && mb.parity() == Parity::Odd) ? -1 : 1;
                t.expect(ring->multiply(a, b) == ring->scale(sign, ring->multiply(b, a)),
                         "graded commutativity");
            }
    }

    return t.result("ring-relations", n, "presentation relations hold");
}

CheckResult check_chern(int n) {
    Tally t;
    for (Space s : {Space::Blowup, Space::Yn}) {
        const auto ring = s == Space::Blowup ? RingPresentation::blowup_ring(n)
                                             : RingPresentation::yn_ring(n);
        const std::string tag = s == Space::Blowup ? "blowup" : "yn";

        std::vector<Monomial> all = ring.basis(Parity::Even);
        for (const Monomial& m : ring.basis(Parity::Odd)) all.push_back(m);

        // additive bijection: per-degree monomial counts equal cyclic-factor
        // counts of the cohomology closed form
        std::vector<int> count(n + 3, 0);
        for (const Monomial& m : all) count[m.degree()] += 1;
        for (int i = 0; i <= n + 2; ++i) {
            const AbelianGroup h =
                s == Space::Blowup ? blowup_cohomology(n, i) : yn_cohomology(n, i);
            t.expect(count[i] == h.free_rank + h.z2_count(),
                     tag + " degree " + std::to_string(i) + " count " +
                         std::to_string(count[i]) + " != " +
                         std::to_string(h.free_rank + h.z2_count()));
        }

        // multiplicativity on determined basis products (table is quadratic,
        // so cap the sweep)
        if (n <= 4) {
            for (const Monomial& ma : all)
                for (const Monomial& mb : all) {
                    RingElement a = ring.zero(), b = ring.zero();
                    a.coeffs[ma] = 1;
                    b.coeffs[mb] = 1;
                    const auto ab = ring.multiply(a, b);
                    if (!ab.determined()) continue;
                    t.expect(chern_character(ring, ab) ==
                                 graded_multiply(ring, chern_character(ring, a),
                                                 chern_character(ring, b)),
                             tag + " chern not multiplicative on " + ring.monomial_name(ma) +
                                 " * " + ring.monomial_name(mb));
                }
        }
    }
    return t.result("chern", n, "graded bijection with cohomology; multiplicative where determined");
}

CheckResult check_restriction(int n) {
    Tally t;
    const int expected = 1 + n + n * (n - 1) / 2;
    const int rank = restriction_matrix(n).rank();
    t.expect(rank == expected, "rank " + std::to_string(rank) + " != 1+" + std::to_string(n) +
                                   "+" + std::to_string(n * (n - 1) / 2));
    return t.result("restriction", n,
                    "restriction matrix has full row rank " + std::to_string(expected) + " = 1+" +
                        std::to_string(n) + "+" + std::to_string(n * (n - 1) / 2));
}

CheckResult check_choose_a(int n) {
    Tally t;
    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) all_pairs.emplace_back(i, j);

    int fallbacks = 0, cases = 0;
    auto run_one = [&](unsigned long long imask, unsigned long long jmask) {
        IndexData data;
        for (int i = 1; i <= n; ++i)
            if ((imask >> (i - 1)) & 1) data.I.push_back(i);
        for (std::size_t k = 0; k < all_pairs.size(); ++k)
            if ((jmask >> k) & 1) data.J.push_back(all_pairs[k]);
        if (data.I.empty() && data.J.empty()) return;
        ++cases;
        const auto witness = exhaustive_choose_a(data, n);
        t.expect(witness.has_value(), "no exhaustive witness");
        const auto r = choose_a(data, n);
        t.expect(parity_count(data, r.a) % 2 == 1, "choose_a parity not odd");
        if (r.used_fallback) ++fallbacks;
        if (!data.I.empty()) t.expect(!r.used_fallback, "case analysis fell back on nonempty I");
    };

    if (n <= 4) {
        for (unsigned long long im = 0; im < (1ull << n); ++im)
            for (unsigned long long jm = 0; jm < (1ull << all_pairs.size()); ++jm)
                run_one(im, jm);
    } else {
        std::mt19937_64 rng(777);
        for (int trial = 0; trial < 500; ++trial)
            run_one(rng() & ((1ull << n) - 1), rng() & ((1ull << all_pairs.size()) - 1));
    }
    return t.result("choose-a", n,
                    std::to_string(cases) + " index configurations separated, " +
                        std::to_string(fallbacks) + " via the exhaustive fallback");
}

CheckResult check_equivariant_kt() {
    Tally t;
    const auto u = kt_gamma_u(), v = kt_gamma_v();
    const auto two = kt_gamma_scale(2, kt_gamma_one());
    const KtGammaElement relations[3] = {
        kt_gamma_multiply(u, kt_gamma_add(u, two)),
        kt_gamma_multiply(v, kt_gamma_add(v, two)),
        kt_gamma_multiply(v, kt_gamma_add(u, two)),
    };
    for (const auto& r : relations) {
        t.expect(r == KtGammaElement{}, "relation not zero in the presented ring");
        const auto fp = kt_gamma_restrict(r);
        t.expect(fp.at_plus == RepRingElement{} && fp.at_minus == RepRingElement{},
                 "relation not zero at the fixed points");
    }
    // the relation images also vanish when multiplied out downstairs
    const auto ru = kt_gamma_restrict(u), rv = kt_gamma_restrict(v);
    const RepRingElement twoc{2, 0};
    t.expect(ru.at_plus * (ru.at_plus + twoc) == RepRingElement{}, "u(u+2) downstairs");
    t.expect(rv.at_minus * (rv.at_minus + twoc) == RepRingElement{}, "v(v+2) downstairs");
    t.expect(rv.at_plus * (ru.at_plus + twoc) == RepRingElement{} &&
                 rv.at_minus * (ru.at_minus + twoc) == RepRingElement{},
             "v(u+2) downstairs");
    t.expect(kt_gamma_restriction_injective(), "fixed-point restriction has a kernel");
    return t.result("equivariant-kt", 0,
                    "circle relations vanish at the fixed points; lattice embeds");
}

CheckResult check_fi_growth() {
    Tally t;
    std::vector<long long> torsion_seq, free_seq;
    for (int n = 1; n <= 12; ++n) {
        torsion_seq.push_back(yn_mod2_betti(n, 3));
        free_seq.push_back(yn_cohomology(n, 3).free_rank);
    }
    // oracle agreement in the reachable range
    for (int n = 1; n <= 5; ++n) {
        const auto mod2 = collapse_to_yn(n, 6).cohomology(Coefficients::Z2);
        const long long direct = n + 2 >= 3 ? mod2[3].z2_count() : 0;
        t.expect(direct == torsion_seq[n - 1], "oracle b3 != formula at n=" + std::to_string(n));
    }
    for (int d = 0; d <= 9; ++d)
        t.expect(!polynomial_growth_test(torsion_seq, d),
                 "torsion sequence looked polynomial at degree " + std::to_string(d));
    t.expect(polynomial_growth_test(free_seq, 1), "free-rank sequence not linear");
    t.expect(!polynomial_growth_test(free_seq, 0), "free-rank sequence constant");
    return t.result("fi-growth", 0,
                    "degree-3 mod-2 dimension is non-polynomial through degree 9; "
                    "free ranks grow linearly");
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "blowup-cohomology", "yn-cohomology", "uct",         "euler",
        "ktheory-counts",    "ring-relations", "chern",      "restriction",
        "choose-a",          "equivariant-kt", "fi-growth",
    };
    return names;
}

bool check_depends_on_n(const std::string& name) {
    return name != "equivariant-kt" && name != "fi-growth";
}

bool check_applicable(const std::string& name, int n, int guard) {
    if (!check_depends_on_n(name)) return true;
    if (n < 1) return false;
    if (name == "blowup-cohomology" || name == "yn-cohomology" || name == "uct" ||
        name == "euler")
        return n <= guard;
    if (name == "ktheory-counts") return n <= 10;
    if (name == "ring-relations") return n <= 4;
    if (name == "chern") return n <= 6;
    if (name == "restriction") return n <= 20;
    if (name == "choose-a") return n <= 10;
    return false;
}

CheckResult run_named_check(const std::string& name, int n, int guard,
                            const ProgressFn& progress) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    if (name == "blowup-cohomology") r = check_blowup_cohomology(n, guard, progress);
    else if (name == "yn-cohomology") r = check_yn_cohomology(n, guard, progress);
    else if (name == "uct") r = check_uct(n, guard, progress);
    else if (name == "euler") r = check_euler(n, guard, progress);
    else if (name == "ktheory-counts") r = check_ktheory_counts(n);
    else if (name == "ring-relations") r = check_ring_relations(n);
    else if (name == "chern") r = check_chern(n);
    else if (name == "restriction") r = check_restriction(n);
    else if (name == "choose-a") r = check_choose_a(n);
    else if (name == "equivariant-kt") r = check_equivariant_kt();
    else if (name == "fi-growth") r = check_fi_growth();
    else throw std::invalid_argument("unknown check: " + name);
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
               .count();
    return r;
}

}  // namespace su2hom
