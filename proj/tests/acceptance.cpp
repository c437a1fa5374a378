// Acceptance gate: each criterion below must hold exactly (integer equality,
// no tolerances).  One PASS/FAIL line per criterion; nonzero exit on any FAIL.
//
// Pinned parameters:
//   1. blowup cohomology, oracle vs closed form ......... n = 1..5, all degrees
//   2. collapsed-space cohomology, oracle vs closed form n = 1..5, all degrees
//   3. K-group additive counts, basis vs closed form .... n = 1..8
//   4. ring-relation property suite ..................... n = 1..4
//   5. Chern bijection n = 1..6; multiplicativity ....... n = 1..4
//   6. restriction rank n = 1..12; index separation ..... n = 1..4 full, n = 5 sampled
//   7. growth of degree-3 cohomology .................... n = 1..12, degrees 0..9
//   8. equivariant circle K-ring relations + embedding ... exact, n-independent

#include <cstdio>
#include <string>
#include <vector>

#include "su2hom/verify.hpp"

using namespace su2hom;

namespace {

int failures = 0;

void report(int index, const std::string& label, const std::vector<CheckResult>& results) {
    bool pass = true;
    long long ms = 0;
    std::string first_fail;
    for (const auto& r : results) {
        ms += r.ms;
        if (!r.pass && pass) {
            pass = false;
            first_fail = " [n=" + std::to_string(r.n) + ": " + r.detail + "]";
        }
    }
    if (!pass) ++failures;
    std::printf("%s  %d. %s (%lld ms)%s\n", pass ? "PASS" : "FAIL", index, label.c_str(), ms,
                first_fail.c_str());
    std::fflush(stdout);
}

std::vector<CheckResult> sweep(const std::string& name, int lo, int hi, int guard) {
    std::vector<CheckResult> out;
    for (int n = lo; n <= hi; ++n) out.push_back(run_named_check(name, n, guard));
    return out;
}

}  // namespace

int main() {
    std::printf("acceptance criteria\n===================\n");

    report(1, "blowup cohomology: cellular oracle = closed form, n = 1..5, all degrees",
           sweep("blowup-cohomology", 1, 5, 6));

    report(2, "collapsed-space cohomology: cellular oracle = closed form, n = 1..5, all degrees",
           sweep("yn-cohomology", 1, 5, 6));

    report(3, "K-group additive structure: presented basis = closed form, n = 1..8",
           sweep("ktheory-counts", 1, 8, 6));

    report(4, "ring relations: signs, torsion annihilation, pushforward identities, n = 1..4",
           sweep("ring-relations", 1, 4, 6));

    report(5, "Chern character: graded bijection n = 1..6, multiplicative n = 1..4",
           sweep("chern", 1, 6, 6));

    {
        auto results = sweep("restriction", 1, 12, 6);
        for (const auto& r : sweep("choose-a", 1, 5, 6)) results.push_back(r);
        report(6, "restriction independence: full rank n = 1..12; separation n = 1..4 full, n = 5 sampled",
               results);
    }

    report(7, "degree-3 growth: oracle match n = 1..5; non-polynomial through degree 9 on n = 1..12",
           {run_named_check("fi-growth", 0, 6)});

    report(8, "equivariant circle K-ring: relations vanish at fixed points, lattice embeds",
           {run_named_check("equivariant-kt", 0, 6)});

    if (failures == 0) {
        std::printf("===================\nall 8 criteria PASS\n");
        return 0;
    }
    std::printf("===================\n%d criteria FAILED\n", failures);
    return 1;
}
