#ifndef SU2HOM_ABELIAN_GROUP_HPP
#define SU2HOM_ABELIAN_GROUP_HPP

#include <map>
#include <string>
#include <vector>

#include "su2hom/int_matrix.hpp"

namespace su2hom {

// Finitely generated abelian group in divisor-chain form:
//   Z^free_rank + Z/d_1 + ... + Z/d_k   with 1 < d_1 | d_2 | ... | d_k.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion;  // divisor chain, every entry > 1

    AbelianGroup() = default;
    AbelianGroup(int free, std::vector<Int> tors);

    static AbelianGroup free(int rank);
    static AbelianGroup z2s(int free_rank, int z2_count);  // Z^a + Z2^b
    static AbelianGroup trivial() { return AbelianGroup(); }

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_elementary_2() const;  // all torsion divisors equal 2

    // Primary decomposition: prime -> exponents (one per cyclic factor).
    std::map<Int, std::vector<int>> primary_form() const;
    int z2_count() const;  // number of Z/2 factors in primary form

    // dim over F2 of G (x) F2 plus Tor contribution is handled by callers;
    // this is just dim(G/2G) = free_rank + #{d_i even}.
    int mod2_quotient_dim() const;

    std::string to_string() const;  // e.g. "Z^2 + Z2^3", "0", "Z + Z4"

    bool operator==(const AbelianGroup& rhs) const = default;
};

}  // namespace su2hom

#endif
