#ifndef SU2HOM_RESTRICTION_HPP
#define SU2HOM_RESTRICTION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "su2hom/mod2.hpp"
#include "su2hom/ring.hpp"

namespace su2hom {

// Sign vector a in {+1, -1}^n, indexed 1..n externally.
using SignVector = std::vector<int>;

// Image of a torsion-detecting generator under restriction to the projective
// plane indexed by a: either 0 or the generator u of the target's 2-torsion.
enum class RestrictionImage { Zero, U };

// u -> u always; v(i) -> u iff a_i = -1; x(i,j) -> u iff a_i = -1 or a_j = -1.
// Everything else throws UnsupportedGenerator.
RestrictionImage restrict_generator(const GeneratorSymbol& g, const SignVector& a);

// Rows: u, v(1..n), x(i,j) lexicographic; columns: sign vectors in
// lexicographic order with +1 before -1.  Entry 1 iff the row generator
// restricts to u at that column.
Mod2Matrix restriction_matrix(int n);

SignVector sign_vector_at(int n, int column);  // the column enumeration

// The matrix has full row rank 1 + n + C(n,2) over GF(2).
bool independence_check(int n);

// Parity data: I a set of circle indices, J a set of index pairs.
struct IndexData {
    std::vector<int> I;
    std::vector<std::pair<int, int>> J;
};

// |{i in I : a_i = -1}| + |{(i,j) in J : a_i = -1 or a_j = -1}|
int parity_count(const IndexData& data, const SignVector& a);

// Lexicographically smallest sign vector with odd parity count, if any.
std::optional<SignVector> exhaustive_choose_a(const IndexData& data, int n);

struct ChooseResult {
    SignVector a;
    bool used_fallback = false;  // the case analysis did not apply or misfired
};

// Case analysis selecting a sign vector with odd parity count.  With
// m_k = 1 + #{pairs in J meeting k}:
//   1. some k in I has m_k odd           -> a_k = -1 alone;
//   2. all m_k even for k in I:
//      2a. a pair inside I               -> both ends -1;
//      2b. k1 = min(I), pick the smallest partner l of k1 in J:
//          m_l - 1 odd -> a_l = -1 alone; else a_l = a_{k1} = -1.
// Empty I falls back to the exhaustive search, as does a branch that fails
// its own parity check (reported via used_fallback).  Throws EmptyInput when
// I and J are both empty.
ChooseResult choose_a(const IndexData& data, int n);

}  // namespace su2hom

#endif
