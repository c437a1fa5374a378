#ifndef SU2HOM_CLOSED_FORM_HPP
#define SU2HOM_CLOSED_FORM_HPP

#include <string>
#include <vector>

#include "su2hom/abelian_group.hpp"

namespace su2hom {

enum class Space { Blowup, Yn };
enum class Parity { Even, Odd };  // K^0 / K^-1

// C(a, b); zero whenever b < 0 or b > a, so degree formulas vanish on their
// own beyond the dimension of the space.
long long binomial(int a, int b);

// Integral cohomology of the desingularized model in degree i:
//   i = 0: Z;  i = 1: 0;  i odd: Z^C(n,i-2);  i > 0 even: Z^C(n,i) + Z2^C(n+1,i-1).
AbelianGroup blowup_cohomology(int n, int i);

// K-theory of the desingularized model by parity:
//   even: Z^(2^(n-1)) + Z2^(2^n);  odd: Z^(2^(n-1)).
AbelianGroup blowup_ktheory(int n, Parity p);

// Integral cohomology of the commuting-tuple space in degree i:
//   0: Z;  1: 0;  2: Z^C(n,2);  3: Z^n + Z2^(2^n-1-n-C(n,2));
//   i >= 4 even: Z^C(n,i) + Z2^C(n+1,i-1);  i >= 5 odd: Z^C(n,i-2).
AbelianGroup yn_cohomology(int n, int i);

// K-theory of the commuting-tuple space:
//   even: Z^(2^(n-1)) + Z2^(2^n-1-n);  odd: Z^(2^(n-1)) + Z2^(2^n-1-n-C(n,2)).
AbelianGroup yn_ktheory(int n, Parity p);

// Mod-2 Betti numbers through universal coefficients:
// dim H^i(X; Z2) = free rank H^i + #Z2(H^i) + #Z2(H^(i+1)).
long long yn_mod2_betti(int n, int i);
long long blowup_mod2_betti(int n, int i);

// True iff the (max_degree+1)-st finite difference of the sequence vanishes
// identically, i.e. the samples fit a polynomial of degree <= max_degree.
// Throws InsufficientData unless values.size() >= max_degree + 2.
bool polynomial_growth_test(const std::vector<long long>& values, int max_degree);

// A degree-indexed table of groups with a short formula string per row,
// ready for serialization.
struct GroupTableRow {
    int degree;                // cohomological degree, or 0/-1 for K parity
    AbelianGroup group;
    std::string formula;       // self-describing source expression
};
struct GroupTable {
    std::string space;         // "blowup" | "yn"
    std::string theory;        // "cohomology-z" | "cohomology-z2" | "k"
    int n = 0;
    std::vector<GroupTableRow> rows;
};

enum class Theory { CohomologyZ, CohomologyZ2, K };

GroupTable make_group_table(Space s, Theory t, int n);

}  // namespace su2hom

#endif
