#ifndef SU2HOM_VERIFY_HPP
#define SU2HOM_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace su2hom {

struct CheckResult {
    std::string name;
    int n = 0;            // 0 for checks that do not depend on n
    bool pass = false;
    std::string detail;   // what was compared; the first mismatches on failure
    long long ms = 0;     // filled by run_named_check
};

using ProgressFn = std::function<void(const std::string&)>;

// Cross-checks between the independent computations.  Each check compares
// exact values; `detail` reports counts and the first few diffs.
CheckResult check_blowup_cohomology(int n, int guard, const ProgressFn& progress = {});
CheckResult check_yn_cohomology(int n, int guard, const ProgressFn& progress = {});
CheckResult check_uct(int n, int guard, const ProgressFn& progress = {});
CheckResult check_euler(int n, int guard, const ProgressFn& progress = {});
CheckResult check_ktheory_counts(int n);
CheckResult check_ring_relations(int n);
CheckResult check_chern(int n);
CheckResult check_restriction(int n);
CheckResult check_choose_a(int n);   // exhaustive n <= 4, fixed-seed sample beyond
CheckResult check_equivariant_kt();
CheckResult check_fi_growth();       // pinned: n = 1..12, rejected degrees 0..9

const std::vector<std::string>& check_names();
// A check may be capped independently of the oracle guard (table sizes).
bool check_applicable(const std::string& name, int n, int guard);
bool check_depends_on_n(const std::string& name);
// Dispatch by name; fills `ms`.  Unknown names throw std::invalid_argument.
CheckResult run_named_check(const std::string& name, int n, int guard,
                            const ProgressFn& progress = {});

}  // namespace su2hom

#endif
