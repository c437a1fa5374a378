#include "su2hom/closed_form.hpp"

#include <sstream>
#include <stdexcept>

#include "su2hom/errors.hpp"

namespace su2hom {

long long binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    long long r = 1;
    for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
}

namespace {

void need_n(int n) {
    if (n < 1) throw std::invalid_argument("closed form: n must be >= 1");
}

long long pow2(int e) { return 1LL << e; }

int as_int(long long v) { return static_cast<int>(v); }

}  // namespace

AbelianGroup blowup_cohomology(int n, int i) {
    need_n(n);
    if (i < 0) throw std::invalid_argument("blowup_cohomology: negative degree");
    if (i == 0) return AbelianGroup::free(1);
    if (i == 1) return AbelianGroup::trivial();
    if (i % 2 == 1) return AbelianGroup::free(as_int(binomial(n, i - 2)));
    return AbelianGroup::z2s(as_int(binomial(n, i)), as_int(binomial(n + 1, i - 1)));
}

AbelianGroup blowup_ktheory(int n, Parity p) {
    need_n(n);
    if (p == Parity::Even) return AbelianGroup::z2s(as_int(pow2(n - 1)), as_int(pow2(n)));
    return AbelianGroup::free(as_int(pow2(n - 1)));
}

AbelianGroup yn_cohomology(int n, int i) {
    need_n(n);
    if (i < 0) throw std::invalid_argument("yn_cohomology: negative degree");
    switch (i) {
        case 0: return AbelianGroup::free(1);
        case 1: return AbelianGroup::trivial();
        case 2: return AbelianGroup::free(as_int(binomial(n, 2)));
        case 3:
            return AbelianGroup::z2s(n, as_int(pow2(n) - 1 - n - binomial(n, 2)));
        default:
            if (i % 2 == 0)
                return AbelianGroup::z2s(as_int(binomial(n, i)), as_int(binomial(n + 1, i - 1)));
            return AbelianGroup::free(as_int(binomial(n, i - 2)));
    }
}

AbelianGroup yn_ktheory(int n, Parity p) {
    need_n(n);
    if (p == Parity::Even)
        return AbelianGroup::z2s(as_int(pow2(n - 1)), as_int(pow2(n) - 1 - n));
    return AbelianGroup::z2s(as_int(pow2(n - 1)),
                             as_int(pow2(n) - 1 - n - binomial(n, 2)));
}

namespace {

long long mod2_betti_from(const AbelianGroup& here, const AbelianGroup& next) {
    return here.free_rank + here.z2_count() + next.z2_count();
}

}  // namespace

long long yn_mod2_betti(int n, int i) {
    return mod2_betti_from(yn_cohomology(n, i), yn_cohomology(n, i + 1));
}

long long blowup_mod2_betti(int n, int i) {
    return mod2_betti_from(blowup_cohomology(n, i), blowup_cohomology(n, i + 1));
}

bool polynomial_growth_test(const std::vector<long long>& values, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("polynomial_growth_test: negative degree");
    if (values.size() < static_cast<std::size_t>(max_degree) + 2) {
        std::ostringstream os;
        os << "polynomial_growth_test: need at least " << max_degree + 2
           << " samples, got " << values.size();
        throw InsufficientData(os.str());
    }
    std::vector<long long> diff = values;
    for (int d = 0; d <= max_degree; ++d)
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.resize(values.size() - max_degree - 1);
    for (long long v : diff)
        if (v != 0) return false;
    return true;
}

namespace {

std::string blowup_formula(int i) {
    if (i == 0) return "Z";
    if (i == 1) return "0";
    if (i % 2 == 1) return "Z^C(n," + std::to_string(i - 2) + ")";
    return "Z^C(n," + std::to_string(i) + ") + Z2^C(n+1," + std::to_string(i - 1) + ")";
}

std::string yn_formula(int i) {
    switch (i) {
        case 0: return "Z";
        case 1: return "0";
        case 2: return "Z^C(n,2)";
        case 3: return "Z^n + Z2^(2^n-1-n-C(n,2))";
        default:
            if (i % 2 == 0)
                return "Z^C(n," + std::to_string(i) + ") + Z2^C(n+1," + std::to_string(i - 1) + ")";
            return "Z^C(n," + std::to_string(i - 2) + ")";
    }
}

}  // namespace

GroupTable make_group_table(Space s, Theory t, int n) {
    need_n(n);
    GroupTable table;
    table.space = (s == Space::Blowup) ? "blowup" : "yn";
    table.n = n;
    const int top = n + 2;
    switch (t) {
        case Theory::CohomologyZ:
            table.theory = "cohomology-z";
            for (int i = 0; i <= top; ++i) {
                AbelianGroup g = (s == Space::Blowup) ? blowup_cohomology(n, i)
                                                      : yn_cohomology(n, i);
                table.rows.push_back({i, g, (s == Space::Blowup) ? blowup_formula(i)
                                                                 : yn_formula(i)});
            }
            break;
        case Theory::CohomologyZ2:
            table.theory = "cohomology-z2";
            for (int i = 0; i <= top; ++i) {
                long long d = (s == Space::Blowup) ? blowup_mod2_betti(n, i)
                                                   : yn_mod2_betti(n, i);
                table.rows.push_back({i, AbelianGroup::z2s(0, as_int(d)),
                                      "free(H^i) + t(H^i) + t(H^(i+1))"});
            }
            break;
        case Theory::K:
            table.theory = "k";
            for (Parity p : {Parity::Even, Parity::Odd}) {
                AbelianGroup g = (s == Space::Blowup) ? blowup_ktheory(n, p)
                                                      : yn_ktheory(n, p);
                std::string f;
                if (s == Space::Blowup)
                    f = (p == Parity::Even) ? "Z^(2^(n-1)) + Z2^(2^n)" : "Z^(2^(n-1))";
                else
                    f = (p == Parity::Even) ? "Z^(2^(n-1)) + Z2^(2^n-1-n)"
                                            : "Z^(2^(n-1)) + Z2^(2^n-1-n-C(n,2))";
                table.rows.push_back({p == Parity::Even ? 0 : -1, g, f});
            }
            break;
    }
    return table;
}

}  // namespace su2hom
