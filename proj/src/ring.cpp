#include "su2hom/ring.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "su2hom/errors.hpp"

namespace su2hom {

int Monomial::degree() const {
    const int from_pairs = 2 * static_cast<int>(pairs.size());
    switch (series) {
        case Series::X: return from_pairs;
        case Series::U:
        case Series::V: return 2 + from_pairs;
        case Series::W: return 3 + from_pairs;
        case Series::F: return 3;
    }
    return 0;
}

std::string GeneratorSymbol::to_string() const {
    static const char* names[] = {"1", "u", "v", "w", "x", "a", "b", "c", "d", "e", "f"};
    std::string s = names[static_cast<int>(kind)];
    if (kind == Kind::B || kind == Kind::C || kind == Kind::D || kind == Kind::E) {
        // primes mark extra x-factors: b(i,j), b'(i,j,k,l), ...
        const std::size_t base = (kind == Kind::E) ? 1 : (kind == Kind::D) ? 4 : (kind == Kind::C) ? 3 : 2;
        for (std::size_t have = idx.size(); have > base; have -= 2) s += '\'';
    }
    if (idx.empty()) return s;
    s += '(';
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(idx[i]);
    }
    return s + ")";
}

namespace {

// ---- monomial products ------------------------------------------------

struct MonProd {
    enum class Kind { Zero, Mono, Atom } kind = Kind::Zero;
    Monomial mono;
    Int sign = 1;   // only meaningful for free (X/W) results
    AtomKey atom;
};

int sort_parity_sign(std::vector<int> seq) {
    // permutation sign via insertion-count; sequences here are tiny
    int inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<std::pair<int, int>> repair(const std::vector<int>& sorted_flat,
                                        std::size_t from = 0) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = from; i + 1 < sorted_flat.size(); i += 2)
        out.emplace_back(sorted_flat[i], sorted_flat[i + 1]);
    return out;
}

// Reduce the factor multiset {u^cu, v-heads, w-heads, x-pairs} to a canonical
// monomial, an atom, or zero.  `seq` is the index sequence in written order,
// used for the orientation sign of free results.
MonProd reduce_factors(int cu, const std::vector<int>& vs, const std::vector<int>& ws,
                       std::vector<std::pair<int, int>> pairs, const std::vector<int>& seq) {
    MonProd out;

    // repeated x-factor: x^2 = u x, so every duplicate pair feeds a u
    std::sort(pairs.begin(), pairs.end());
    std::vector<std::pair<int, int>> distinct;
    for (std::size_t i = 0; i < pairs.size();) {
        std::size_t j = i;
        while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
        cu += static_cast<int>(j - i) - 1;
        distinct.push_back(pairs[i]);
        i = j;
    }

    // products of the torsion/odd generators among themselves all vanish:
    // u^2 = u v = v v' = 0, u w = v w = 0, w w' = 0
    if (cu >= 2) return out;
    if (cu == 1 && (!vs.empty() || !ws.empty())) return out;
    if (vs.size() >= 2 || ws.size() >= 2) return out;
    if (!vs.empty() && !ws.empty()) return out;

    std::vector<int> flat;
    if (!vs.empty()) flat.push_back(vs[0]);
    if (!ws.empty()) flat.push_back(ws[0]);
    for (const auto& [i, j] : distinct) {
        flat.push_back(i);
        flat.push_back(j);
    }
    std::vector<int> sorted = flat;
    std::sort(sorted.begin(), sorted.end());
    const bool repeated =
        std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();

    if (cu == 1) {
        // u-multiples of an overlapping x-product vanish
        if (repeated) return out;
        out.kind = MonProd::Kind::Mono;
        out.mono = {Series::U, -1, repair(sorted)};
        return out;
    }
    if (!vs.empty()) {
        // v-multiples of overlapping products vanish as well; otherwise the
        // index set alone determines the basis element (coefficients are mod 2)
        if (repeated) return out;
        out.kind = MonProd::Kind::Mono;
        out.mono = {Series::V, sorted[0], repair(sorted, 1)};
        return out;
    }
    if (!ws.empty()) {
        // the odd part is free and injects into the antisymmetric picture:
        // a repeated index kills the product exactly
        if (repeated) return out;
        out.kind = MonProd::Kind::Mono;
        out.mono = {Series::W, sorted[0], repair(sorted, 1)};
        out.sign = sort_parity_sign(seq);
        return out;
    }
    if (!repeated) {
        out.kind = MonProd::Kind::Mono;
        out.mono = {Series::X, -1, repair(sorted)};
        out.sign = sort_parity_sign(seq);
        return out;
    }
    // distinct x-factors sharing an index: undetermined 2-torsion atom
    out.kind = MonProd::Kind::Atom;
    out.atom = std::move(distinct);
    return out;
}

struct FactorView {
    int cu = 0;
    std::vector<int> vs, ws;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> seq;
    bool has_f = false;
    int f_head = -1;
    bool is_unit = false;
};

FactorView view_of(const Monomial& m) {
    FactorView f;
    switch (m.series) {
        case Series::U: f.cu = 1; break;
        case Series::V: f.vs.push_back(m.head); f.seq.push_back(m.head); break;
        case Series::W: f.ws.push_back(m.head); f.seq.push_back(m.head); break;
        case Series::F: f.has_f = true; f.f_head = m.head; break;
        case Series::X: break;
    }
    for (const auto& [i, j] : m.pairs) {
        f.pairs.emplace_back(i, j);
        f.seq.push_back(i);
        f.seq.push_back(j);
    }
    f.is_unit = m.is_unit();
    return f;
}

FactorView view_of(const AtomKey& a) {
    FactorView f;
    for (const auto& [i, j] : a) {
        f.pairs.emplace_back(i, j);
        f.seq.push_back(i);
        f.seq.push_back(j);
    }
    return f;
}

MonProd multiply_views(const FactorView& a, const FactorView& b) {
    MonProd zero;
    // f-classes annihilate everything except the unit
    if (a.has_f || b.has_f) {
        if (a.has_f && b.is_unit) {
            MonProd out;
            out.kind = MonProd::Kind::Mono;
            out.mono = {Series::F, a.f_head, {}};
            return out;
        }
        if (b.has_f && a.is_unit) {
            MonProd out;
            out.kind = MonProd::Kind::Mono;
            out.mono = {Series::F, b.f_head, {}};
            return out;
        }
        return zero;
    }
    std::vector<int> vs = a.vs, ws = a.ws, seq = a.seq;
    vs.insert(vs.end(), b.vs.begin(), b.vs.end());
    ws.insert(ws.end(), b.ws.begin(), b.ws.end());
    seq.insert(seq.end(), b.seq.begin(), b.seq.end());
    std::vector<std::pair<int, int>> pairs = a.pairs;
    pairs.insert(pairs.end(), b.pairs.begin(), b.pairs.end());
    return reduce_factors(a.cu + b.cu, vs, ws, std::move(pairs), seq);
}

}  // namespace

// ---- presentation -------------------------------------------------------

RingPresentation::RingPresentation(Space s, int n) : space_(s), n_(n) {
    if (n < 1) throw std::invalid_argument("RingPresentation: n must be >= 1");
    if (n > 16) throw std::invalid_argument("RingPresentation: n too large for basis enumeration");
}

RingPresentation RingPresentation::blowup_ring(int n) { return RingPresentation(Space::Blowup, n); }
RingPresentation RingPresentation::yn_ring(int n) { return RingPresentation(Space::Yn, n); }

int RingPresentation::f_count() const {
    if (space_ == Space::Blowup) return 0;
    return static_cast<int>((1LL << n_) - 1 - n_ - binomial(n_, 2));
}

RingElement RingPresentation::zero() const { return {space_, n_, {}, {}}; }

RingElement RingPresentation::one() const {
    RingElement e = zero();
    e.coeffs[Monomial{}] = 1;
    return e;
}

void RingPresentation::check(const RingElement& e) const {
    if (e.space != space_ || e.n != n_)
        throw RingMismatch("element does not belong to this presentation");
}

RingElement RingPresentation::add(const RingElement& a, const RingElement& b) const {
    check(a);
    check(b);
    RingElement out = a;
    for (const auto& [m, c] : b.coeffs) {
        auto [it, fresh] = out.coeffs.try_emplace(m, c);
        if (!fresh) it->second += c;
    }
    for (const auto& [k, c] : b.atoms) out.atoms[k] ^= (c & 1);
    // normalize: torsion coefficients mod 2, drop zeros
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();) {
        if (it->first.is_torsion()) it->second = ((it->second % 2) + 2) % 2;
        it = (it->second == 0) ? out.coeffs.erase(it) : std::next(it);
    }
    for (auto it = out.atoms.begin(); it != out.atoms.end();)
        it = (it->second == 0) ? out.atoms.erase(it) : std::next(it);
    return out;
}

RingElement RingPresentation::scale(const Int& c, const RingElement& a) const {
    check(a);
    RingElement out = zero();
    if (c == 0) return out;
    for (const auto& [m, v] : a.coeffs) {
        Int nv = c * v;
        if (m.is_torsion()) nv = ((nv % 2) + 2) % 2;
        if (nv != 0) out.coeffs[m] = nv;
    }
    if (mpz_odd_p(c.get_mpz_t()))
        out.atoms = a.atoms;
    return out;
}

RingElement RingPresentation::multiply(const RingElement& a, const RingElement& b) const {
    check(a);
    check(b);
    RingElement out = zero();
    auto accumulate = [&](const MonProd& p, const Int& coeff, bool torsion_input) {
        if (p.kind == MonProd::Kind::Zero || coeff == 0) return;
        if (p.kind == MonProd::Kind::Atom) {
            if (mpz_odd_p(coeff.get_mpz_t())) out.atoms[p.atom] ^= 1;
            return;
        }
        Int c = coeff * p.sign;
        if (p.mono.is_torsion() || torsion_input) c = ((c % 2) + 2) % 2;
        if (c == 0) return;
        assert(!(torsion_input && !p.mono.is_torsion()));
        auto [it, fresh] = out.coeffs.try_emplace(p.mono, c);
        if (!fresh) {
            it->second += c;
            if (it->first.is_torsion()) it->second = ((it->second % 2) + 2) % 2;
            if (it->second == 0) out.coeffs.erase(it);
        }
    };

    for (const auto& [m1, c1] : a.coeffs)
        for (const auto& [m2, c2] : b.coeffs)
            accumulate(multiply_views(view_of(m1), view_of(m2)), c1 * c2, false);
    for (const auto& [k1, c1] : a.atoms)
        for (const auto& [m2, c2] : b.coeffs)
            accumulate(multiply_views(view_of(k1), view_of(m2)), Int(c1) * c2, true);
    for (const auto& [m1, c1] : a.coeffs)
        for (const auto& [k2, c2] : b.atoms)
            accumulate(multiply_views(view_of(m1), view_of(k2)), c1 * Int(c2), true);
    for (const auto& [k1, c1] : a.atoms)
        for (const auto& [k2, c2] : b.atoms)
            accumulate(multiply_views(view_of(k1), view_of(k2)), Int(c1) * Int(c2), true);
    return out;
}

namespace {

void check_index(int i, int n, const char* who) {
    if (i < 1 || i > n) {
        std::ostringstream os;
        os << who << ": index " << i << " outside 1.." << n;
        throw std::invalid_argument(os.str());
    }
}

// x-monomial from a strictly increasing index list (possibly empty)
Monomial x_monomial(const std::vector<int>& sorted) {
    Monomial m;
    for (std::size_t i = 0; i + 1 < sorted.size(); i += 2)
        m.pairs.emplace_back(sorted[i], sorted[i + 1]);
    return m;
}

}  // namespace

RingElement RingPresentation::generator(const GeneratorSymbol& g) const {
    using Kind = GeneratorSymbol::Kind;
    auto base = [&](Kind k) {
        return k == Kind::One || k == Kind::U || k == Kind::V || k == Kind::W || k == Kind::X;
    };
    if (space_ == Space::Blowup && !base(g.kind))
        throw std::invalid_argument("generator " + g.to_string() + " lives in the collapsed space");
    if (space_ == Space::Yn && base(g.kind) && g.kind != Kind::One)
        throw std::invalid_argument("generator " + g.to_string() + " lives in the desingularized space");

    for (int i : g.idx)
        if (g.kind != Kind::F) check_index(i, n_, "generator");

    // base generators, assembled directly
    const RingPresentation blowup = (space_ == Space::Blowup) ? *this : blowup_ring(n_);
    auto mono = [&](Series s, int head, std::vector<std::pair<int, int>> pairs) {
        RingElement e = blowup.zero();
        e.coeffs[Monomial{s, head, std::move(pairs)}] = 1;
        return e;
    };
    auto x_gen = [&](int i, int j) {
        RingElement e = blowup.zero();
        if (i == j) return e;  // x(i,i) = 0
        Monomial m{Series::X, -1, {{std::min(i, j), std::max(i, j)}}};
        e.coeffs[m] = (i < j) ? 1 : -1;  // x(j,i) = -x(i,j)
        return e;
    };

    switch (g.kind) {
        case Kind::One: return one();
        case Kind::U: return mono(Series::U, -1, {});
        case Kind::V: return mono(Series::V, g.idx.at(0), {});
        case Kind::W: return mono(Series::W, g.idx.at(0), {});
        case Kind::X: return x_gen(g.idx.at(0), g.idx.at(1));
        default: break;
    }

    // pushforward generators: build the lift in the base presentation
    auto product_of = [&](RingElement e, std::size_t first_pair_at) -> RingElement {
        for (std::size_t i = first_pair_at; i + 1 < g.idx.size(); i += 2)
            e = blowup.multiply(e, x_gen(g.idx[i], g.idx[i + 1]));
        return e;
    };
    RingElement lift = blowup.zero();
    switch (g.kind) {
        case Kind::A:
            if (g.idx.size() != 2) throw std::invalid_argument("a takes two indices");
            lift = blowup.scale(2, x_gen(g.idx[0], g.idx[1]));
            break;
        case Kind::B:  // u * x-factors, at least one
            if (g.idx.size() < 2 || g.idx.size() % 2 != 0)
                throw std::invalid_argument("b takes an even number (>= 2) of indices");
            lift = product_of(mono(Series::U, -1, {}), 0);
            break;
        case Kind::C:  // v(first) * x-factors, at least one
            if (g.idx.size() < 3 || g.idx.size() % 2 != 1)
                throw std::invalid_argument("c takes an odd number (>= 3) of indices");
            lift = product_of(mono(Series::V, g.idx[0], {}), 1);
            break;
        case Kind::D:  // x-factors, at least two
            if (g.idx.size() < 4 || g.idx.size() % 2 != 0)
                throw std::invalid_argument("d takes an even number (>= 4) of indices");
            lift = product_of(x_gen(g.idx[0], g.idx[1]), 2);
            break;
        case Kind::E:  // w(first) * x-factors
            if (g.idx.size() % 2 != 1)
                throw std::invalid_argument("e takes an odd number of indices");
            lift = product_of(mono(Series::W, g.idx[0], {}), 1);
            break;
        case Kind::F: {
            if (g.idx.size() != 1) throw std::invalid_argument("f takes one index");
            if (g.idx[0] < 1 || g.idx[0] > f_count())
                throw std::invalid_argument("f index outside 1..f_count");
            RingElement e = zero();
            e.coeffs[Monomial{Series::F, g.idx[0], {}}] = 1;
            return e;
        }
        default: throw std::invalid_argument("unknown generator");
    }
    if (!lift.determined())
        throw std::logic_error("pushforward generator reduced to an atom");
    lift.space = space_;
    return lift;
}

std::vector<GeneratorSymbol> RingPresentation::generators() const {
    using Kind = GeneratorSymbol::Kind;
    std::vector<GeneratorSymbol> out;
    auto subsets_of_size = [&](int size, auto&& emit) {
        std::vector<int> pick;
        auto rec = [&](auto&& self, int next) -> void {
            if (static_cast<int>(pick.size()) == size) {
                emit(pick);
                return;
            }
            for (int i = next; i <= n_; ++i) {
                pick.push_back(i);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        rec(rec, 1);
    };
    if (space_ == Space::Blowup) {
        out.push_back(GeneratorSymbol::u());
        for (int i = 1; i <= n_; ++i) out.push_back(GeneratorSymbol::v(i));
        for (int i = 1; i <= n_; ++i) out.push_back(GeneratorSymbol::w(i));
        subsets_of_size(2, [&](const std::vector<int>& s) {
            out.push_back(GeneratorSymbol::x(s[0], s[1]));
        });
        return out;
    }
    subsets_of_size(2, [&](const std::vector<int>& s) { out.push_back({Kind::A, s}); });
    for (int sz = 2; sz <= n_; sz += 2)
        subsets_of_size(sz, [&](const std::vector<int>& s) { out.push_back({Kind::B, s}); });
    for (int sz = 3; sz <= n_; sz += 2)
        subsets_of_size(sz, [&](const std::vector<int>& s) { out.push_back({Kind::C, s}); });
    for (int sz = 4; sz <= n_; sz += 2)
        subsets_of_size(sz, [&](const std::vector<int>& s) { out.push_back({Kind::D, s}); });
    for (int sz = 1; sz <= n_; sz += 2)
        subsets_of_size(sz, [&](const std::vector<int>& s) { out.push_back({Kind::E, s}); });
    for (int i = 1; i <= f_count(); ++i) out.push_back(GeneratorSymbol::f(i));
    return out;
}

std::vector<Monomial> RingPresentation::basis(Parity p) const {
    std::vector<Monomial> out;
    std::vector<int> pick;
    auto all_subsets = [&](auto&& emit) {
        auto rec = [&](auto&& self, int next) -> void {
            emit(pick);
            for (int i = next; i <= n_; ++i) {
                pick.push_back(i);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        rec(rec, 1);
    };
    all_subsets([&](const std::vector<int>& s) {
        const int size = static_cast<int>(s.size());
        if (p == Parity::Even) {
            if (size % 2 == 0) {
                out.push_back(x_monomial(s));                       // X-series (unit at s = {})
                Monomial u = x_monomial(s);
                u.series = Series::U;
                if (space_ == Space::Blowup || size >= 2) out.push_back(u);  // U-series
            } else {
                // V-series: head = min, x-factors on the rest
                Monomial m = x_monomial(std::vector<int>(s.begin() + 1, s.end()));
                m.series = Series::V;
                m.head = s[0];
                if (space_ == Space::Blowup || size >= 3) out.push_back(m);
            }
        } else if (size % 2 == 1) {
            Monomial m = x_monomial(std::vector<int>(s.begin() + 1, s.end()));
            m.series = Series::W;
            m.head = s[0];
            out.push_back(m);
        }
    });
    if (p == Parity::Odd)
        for (int i = 1; i <= f_count(); ++i) out.push_back(Monomial{Series::F, i, {}});
    std::sort(out.begin(), out.end());
    return out;
}

AbelianGroup RingPresentation::additive_structure(Parity p) const {
    int free = 0, torsion = 0;
    for (const Monomial& m : basis(p))
        (m.is_torsion() ? torsion : free) += 1;
    return AbelianGroup::z2s(free, torsion);
}

std::string RingPresentation::monomial_name(const Monomial& m) const {
    auto idx_list = [](const Monomial& mm, bool with_head) {
        std::string s = "(";
        bool first = true;
        if (with_head) {
            s += std::to_string(mm.head);
            first = false;
        }
        for (const auto& [i, j] : mm.pairs) {
            if (!first) s += ',';
            s += std::to_string(i) + "," + std::to_string(j);
            first = false;
        }
        return s + ")";
    };
    if (space_ == Space::Blowup) {
        std::string s;
        switch (m.series) {
            case Series::X: {
                if (m.pairs.empty()) return std::string("1");
                for (const auto& [i, j] : m.pairs) {
                    if (!s.empty()) s += '*';
                    s += "x(" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
                return s;
            }
            case Series::U: {
                s = "u";
                for (const auto& [i, j] : m.pairs)
                    s += "*x(" + std::to_string(i) + "," + std::to_string(j) + ")";
                return s;
            }
            case Series::V:
            case Series::W: {
                s = (m.series == Series::V ? "v(" : "w(") + std::to_string(m.head) + ")";
                for (const auto& [i, j] : m.pairs)
                    s += "*x(" + std::to_string(i) + "," + std::to_string(j) + ")";
                return s;
            }
            case Series::F: break;
        }
        throw std::logic_error("monomial_name: f-class in the desingularized presentation");
    }
    const int k = static_cast<int>(m.pairs.size());
    auto primes = [](int count) { return std::string(count, '\''); };
    switch (m.series) {
        case Series::X:
            if (k == 0) return "1";
            if (k == 1) return "a" + idx_list(m, false);   // lattice generator a = 2x
            return "d" + primes(k - 2) + idx_list(m, false);
        case Series::U: return "b" + primes(k - 1) + idx_list(m, false);
        case Series::V: return "c" + primes(k - 1) + idx_list(m, true);
        case Series::W: return "e" + primes(k) + idx_list(m, true);
        case Series::F: return "f(" + std::to_string(m.head) + ")";
    }
    throw std::logic_error("monomial_name: unreachable");
}

std::string RingPresentation::to_string(const RingElement& e) const {
    check(e);
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.coeffs) {
        Int shown = c;
        if (space_ == Space::Yn && m.series == Series::X && m.pairs.size() == 1) {
            // the degree-2 lattice is generated by a = 2x
            if (c % 2 != 0) throw std::logic_error("element leaves the pushforward lattice");
            shown = c / 2;
        }
        if (!first) os << (shown > 0 ? " + " : " - ");
        else if (shown < 0) os << "-";
        first = false;
        Int mag = abs(shown);
        if (mag != 1 || m.is_unit()) os << mag.get_str() << (m.is_unit() ? "" : "*");
        if (!m.is_unit()) os << monomial_name(m);
    }
    for (const auto& [key, c] : e.atoms) {
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "[";
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) os << "*";
            os << "x(" << key[i].first << "," << key[i].second << ")";
        }
        os << "]?";  // undetermined 2-torsion atom
    }
    return os.str();
}

std::string RingPresentation::describe(const GeneratorSymbol& g) {
    using Kind = GeneratorSymbol::Kind;
    switch (g.kind) {
        case Kind::One: return "unit class";
        case Kind::U: return "reduced line bundle pulled back from the base projective plane";
        case Kind::V: return "reduced line bundle from the marked circle factor";
        case Kind::W: return "odd generator attached to the marked circle factor";
        case Kind::X: return "reduced line bundle on the indexed sub-product";
        case Kind::A: return "pushforward of twice a degree-2 line class";
        case Kind::B: return "pushforward of u times x-classes";
        case Kind::C: return "pushforward of v times x-classes";
        case Kind::D: return "pushforward of a product of x-classes";
        case Kind::E: return "pushforward of w times x-classes";
        case Kind::F: return "boundary class from the collapsed subspaces";
    }
    return "";
}

// ---- chern character ----------------------------------------------------

GradedClass chern_character(const RingPresentation& ring, const RingElement& e) {
    if (e.space != ring.space() || e.n != ring.n())
        throw RingMismatch("chern_character: element does not belong to this presentation");
    if (!e.determined())
        throw UndeterminedInput("chern_character: element carries an undetermined atom");
    GradedClass out;
    for (const auto& [m, c] : e.coeffs) {
        RingElement& part = out.parts[m.degree()];
        if (part.coeffs.empty() && part.atoms.empty()) {
            part.space = e.space;
            part.n = e.n;
        }
        part.coeffs[m] = c;
    }
    return out;
}

GradedClass graded_multiply(const RingPresentation& ring, const GradedClass& a,
                            const GradedClass& b) {
    GradedClass out;
    for (const auto& [da, ea] : a.parts)
        for (const auto& [db, eb] : b.parts) {
            RingElement prod = ring.multiply(ea, eb);
            if (prod.is_zero()) continue;
            // the rewrite rules are degree-homogeneous, so everything lands
            // in degree da + db; re-grade defensively by monomial degree
            for (const auto& [m, c] : prod.coeffs) {
                assert(m.degree() == da + db);
                RingElement& part = out.parts[da + db];
                if (part.coeffs.empty() && part.atoms.empty()) {
                    part.space = prod.space;
                    part.n = prod.n;
                }
                auto [it, fresh] = part.coeffs.try_emplace(m, c);
                if (!fresh) {
                    it->second += c;
                    if (m.is_torsion()) it->second = ((it->second % 2) + 2) % 2;
                    if (it->second == 0) part.coeffs.erase(it);
                }
            }
            for (const auto& [k, c] : prod.atoms) {
                RingElement& part = out.parts[da + db];
                if (part.coeffs.empty() && part.atoms.empty()) {
                    part.space = prod.space;
                    part.n = prod.n;
                }
                part.atoms[k] ^= c;
                if (part.atoms[k] == 0) part.atoms.erase(k);
            }
        }
    for (auto it = out.parts.begin(); it != out.parts.end();)
        it = it->second.is_zero() ? out.parts.erase(it) : std::next(it);
    return out;
}

}  // namespace su2hom
