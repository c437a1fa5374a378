#ifndef SU2HOM_EQUIVARIANT_KT_HPP
#define SU2HOM_EQUIVARIANT_KT_HPP

#include <array>
#include <string>

namespace su2hom {

// The equivariant even K-ring of the circle with the reflection action:
//   Z[u, v] / ( u(u+2), v(v+2), v(u+2) ),
// free of rank 3 over Z with basis {1, u, v}.  Restricting to the two fixed
// points lands in R x R where R = Z[c]/(c^2 - 1) is the representation ring
// of the two-element group.

// a + b*c in Z[c]/(c^2-1)
struct RepRingElement {
    long long a = 0, b = 0;
    bool operator==(const RepRingElement&) const = default;
    RepRingElement operator*(const RepRingElement& o) const {
        return {a * o.a + b * o.b, a * o.b + b * o.a};
    }
    RepRingElement operator+(const RepRingElement& o) const { return {a + o.a, b + o.b}; }
    RepRingElement operator-(const RepRingElement& o) const { return {a - o.a, b - o.b}; }
    std::string to_string() const;
};

struct FixedPointPair {
    RepRingElement at_plus, at_minus;
    bool operator==(const FixedPointPair&) const = default;
};

// k1*1 + k2*u + k3*v in the basis {1, u, v}
struct KtGammaElement {
    long long k1 = 0, k2 = 0, k3 = 0;
    bool operator==(const KtGammaElement&) const = default;
};

KtGammaElement kt_gamma_one();
KtGammaElement kt_gamma_u();
KtGammaElement kt_gamma_v();

KtGammaElement kt_gamma_add(const KtGammaElement& a, const KtGammaElement& b);
KtGammaElement kt_gamma_scale(long long c, const KtGammaElement& a);
// multiplication modulo the three relations
KtGammaElement kt_gamma_multiply(const KtGammaElement& a, const KtGammaElement& b);

// restriction to the fixed points: 1 -> (1, 1), u -> (c-1, c-1), v -> (0, c-1)
FixedPointPair kt_gamma_restrict(const KtGammaElement& e);

// the restriction is injective on the rank-3 lattice
bool kt_gamma_restriction_injective();

}  // namespace su2hom

#endif
