#include "su2hom/abelian_group.hpp"

#include <sstream>
#include <stdexcept>

namespace su2hom {

AbelianGroup::AbelianGroup(int free, std::vector<Int> tors)
    : free_rank(free), torsion(std::move(tors)) {
    if (free_rank < 0) throw std::invalid_argument("AbelianGroup: negative rank");
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] <= 1) throw std::invalid_argument("AbelianGroup: divisor must exceed 1");
        if (i > 0 && torsion[i] % torsion[i - 1] != 0)
            throw std::invalid_argument("AbelianGroup: divisor chain violated");
    }
}

AbelianGroup AbelianGroup::free(int rank) { return AbelianGroup(rank, {}); }

AbelianGroup AbelianGroup::z2s(int free_rank, int z2_count) {
    return AbelianGroup(free_rank, std::vector<Int>(z2_count, Int(2)));
}

bool AbelianGroup::is_elementary_2() const {
    for (const Int& d : torsion)
        if (d != 2) return false;
    return true;
}

std::map<Int, std::vector<int>> AbelianGroup::primary_form() const {
    std::map<Int, std::vector<int>> out;
    for (Int d : torsion) {
        // trial division; divisors arising here are tiny
        for (Int p = 2; p * p <= d;) {
            if (d % p == 0) {
                int e = 0;
                while (d % p == 0) { d /= p; ++e; }
                out[p].push_back(e);
            }
            p += (p == 2) ? 1 : 2;
        }
        if (d > 1) out[d].push_back(1);
    }
    return out;
}

int AbelianGroup::z2_count() const {
    int c = 0;
    for (const Int& d : torsion)
        if (d % 2 == 0 && d % 4 != 0) ++c;  // a divisor yields a Z/2 factor iff 2 || d
    return c;
}

int AbelianGroup::mod2_quotient_dim() const {
    int c = free_rank;
    for (const Int& d : torsion)
        if (d % 2 == 0) ++c;
    return c;
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " + ";
        first = false;
    };
    if (free_rank == 1) { sep(); os << "Z"; }
    else if (free_rank > 1) { sep(); os << "Z^" << free_rank; }
    // group equal consecutive divisors: Z2^3 instead of Z2 + Z2 + Z2
    for (std::size_t i = 0; i < torsion.size();) {
        std::size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        sep();
        os << "Z" << torsion[i].get_str();
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

}  // namespace su2hom
