#include "su2hom/equivariant_kt.hpp"

#include "su2hom/int_matrix.hpp"
#include "su2hom/smith.hpp"

namespace su2hom {

std::string RepRingElement::to_string() const {
    if (a == 0 && b == 0) return "0";
    std::string s;
    if (a != 0) s = std::to_string(a);
    if (b != 0) {
        if (!s.empty()) s += (b > 0) ? " + " : " - ";
        else if (b < 0) s += "-";
        long long m = b < 0 ? -b : b;
        if (m != 1) s += std::to_string(m) + "*";
        s += "c";
    }
    return s;
}

KtGammaElement kt_gamma_one() { return {1, 0, 0}; }
KtGammaElement kt_gamma_u() { return {0, 1, 0}; }
KtGammaElement kt_gamma_v() { return {0, 0, 1}; }

KtGammaElement kt_gamma_add(const KtGammaElement& a, const KtGammaElement& b) {
    return {a.k1 + b.k1, a.k2 + b.k2, a.k3 + b.k3};
}

KtGammaElement kt_gamma_scale(long long c, const KtGammaElement& a) {
    return {c * a.k1, c * a.k2, c * a.k3};
}

KtGammaElement kt_gamma_multiply(const KtGammaElement& a, const KtGammaElement& b) {
    // u*u = -2u, v*v = -2v, u*v = v*u = -2v  (from the three relations)
    KtGammaElement r;
    r.k1 = a.k1 * b.k1;
    r.k2 = a.k1 * b.k2 + a.k2 * b.k1 - 2 * a.k2 * b.k2;
    r.k3 = a.k1 * b.k3 + a.k3 * b.k1 - 2 * (a.k2 * b.k3 + a.k3 * b.k2 + a.k3 * b.k3);
    return r;
}

FixedPointPair kt_gamma_restrict(const KtGammaElement& e) {
    const RepRingElement one{1, 0}, cm1{-1, 1};  // c - 1
    RepRingElement plus = one * RepRingElement{e.k1, 0} + cm1 * RepRingElement{e.k2, 0};
    RepRingElement minus = plus + cm1 * RepRingElement{e.k3, 0};
    // u and v restrict to c-1 at the reflected circle's two fixed points; v is
    // supported at -1 only
    return {plus, minus};
}

bool kt_gamma_restriction_injective() {
    // columns: images of 1, u, v in the basis {1, c} x {1, c} of R x R
    IntMatrix m(4, 3);
    m.set(0, 0, 1);               // 1 -> (1, 1)
    m.set(2, 0, 1);
    m.set(0, 1, -1); m.set(1, 1, 1);  // u -> (c-1, c-1)
    m.set(2, 1, -1); m.set(3, 1, 1);
    m.set(2, 2, -1); m.set(3, 2, 1);  // v -> (0, c-1)
    return integer_rank(m) == 3;
}

}  // namespace su2hom
