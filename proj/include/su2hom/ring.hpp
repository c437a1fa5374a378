#ifndef SU2HOM_RING_HPP
#define SU2HOM_RING_HPP

#include <map>
#include <string>
#include <vector>

#include "su2hom/abelian_group.hpp"
#include "su2hom/closed_form.hpp"
#include "su2hom/int_matrix.hpp"

namespace su2hom {

// Canonical additive basis monomials of the presented K-rings.
//
//   X: x(i1,i2) * ... * x(i_{2k-1}, i_{2k})  (k = 0 gives the unit)
//   U: u * (X-monomial)              2-torsion, even
//   V: v(head) * (X-monomial)        2-torsion, even, head < every X index
//   W: w(head) * (X-monomial)        free, odd, head < every X index
//   F: f(head)                       2-torsion, odd (collapsed space only)
//
// The flattened index list of pairs is strictly increasing, so a canonical
// monomial is determined by its series, head, and index set.
enum class Series { X, U, V, W, F };

struct Monomial {
    Series series = Series::X;
    int head = -1;                          // V/W/F only
    std::vector<std::pair<int, int>> pairs; // X factors

    bool is_unit() const { return series == Series::X && pairs.empty(); }
    bool is_torsion() const {
        return series == Series::U || series == Series::V || series == Series::F;
    }
    Parity parity() const {
        return (series == Series::W || series == Series::F) ? Parity::Odd : Parity::Even;
    }
    // Degree of the matching cohomology generator: each x contributes 2,
    // u and v contribute 2, w contributes 3, f sits in degree 3.
    int degree() const;

    auto operator<=>(const Monomial&) const = default;
};

// A product of distinct x-factors whose index pairs overlap is 2-torsion but
// not determined by the relations; it is carried as a formal atom keyed by
// its sorted pair list.
using AtomKey = std::vector<std::pair<int, int>>;

// Z-linear combination of basis monomials plus a Z2-combination of atoms.
// Torsion monomial coefficients are kept in {0, 1}.
struct RingElement {
    Space space = Space::Blowup;
    int n = 0;
    std::map<Monomial, Int> coeffs;
    std::map<AtomKey, int> atoms;

    bool is_zero() const { return coeffs.empty() && atoms.empty(); }
    bool determined() const { return atoms.empty(); }

    bool operator==(const RingElement&) const = default;
};

// Named generators.  The base presentation uses u, v(i), w(i), x(i,j); the
// collapsed-space presentation is generated by pushforwards, named
//   a(i,j) = 2x(i,j),  b = u * x-factors,  c = v * x-factors,
//   d = x-factors (k >= 2),  e = w * x-factors,  f(i)
// with primes added for each x-factor beyond the first (b', c', d', e').
struct GeneratorSymbol {
    enum class Kind { One, U, V, W, X, A, B, C, D, E, F };
    Kind kind = Kind::One;
    std::vector<int> idx;

    static GeneratorSymbol one() { return {Kind::One, {}}; }
    static GeneratorSymbol u() { return {Kind::U, {}}; }
    static GeneratorSymbol v(int i) { return {Kind::V, {i}}; }
    static GeneratorSymbol w(int i) { return {Kind::W, {i}}; }
    static GeneratorSymbol x(int i, int j) { return {Kind::X, {i, j}}; }
    static GeneratorSymbol f(int i) { return {Kind::F, {i}}; }

    std::string to_string() const;
    bool operator==(const GeneratorSymbol&) const = default;
};

// One presentation per (space, n).  All element arithmetic lives here so the
// ring can reject elements of a different presentation.
class RingPresentation {
  public:
    static RingPresentation blowup_ring(int n);
    static RingPresentation yn_ring(int n);

    Space space() const { return space_; }
    int n() const { return n_; }
    // number of f generators: 2^n - 1 - n - C(n,2) in the collapsed space
    int f_count() const;

    RingElement zero() const;
    RingElement one() const;
    RingElement generator(const GeneratorSymbol& g) const;
    std::vector<GeneratorSymbol> generators() const;

    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement scale(const Int& c, const RingElement& a) const;
    // Reduces to the canonical basis; overlapping x-products surface as atoms.
    RingElement multiply(const RingElement& a, const RingElement& b) const;

    // Canonical additive basis of the given parity (monomials only; every
    // atom already equals a Z2-combination of the torsion part of this basis).
    std::vector<Monomial> basis(Parity p) const;
    AbelianGroup additive_structure(Parity p) const;

    std::string monomial_name(const Monomial& m) const;
    std::string to_string(const RingElement& e) const;

    // short provenance note for a generator, for report output
    static std::string describe(const GeneratorSymbol& g);

  private:
    RingPresentation(Space s, int n);
    void check(const RingElement& e) const;
    Space space_;
    int n_;
};

// Chern character as a degree-graded relabeling: every determined basis
// monomial maps to the like-named cohomology generator in degree
// Monomial::degree().  Throws UndeterminedInput when the element carries an
// atom.
struct GradedClass {
    std::map<int, RingElement> parts;
    bool operator==(const GradedClass&) const = default;
};

GradedClass chern_character(const RingPresentation& ring, const RingElement& e);
GradedClass graded_multiply(const RingPresentation& ring, const GradedClass& a,
                            const GradedClass& b);

}  // namespace su2hom

#endif
