#include "su2hom/spaces.hpp"

#include <sstream>
#include <stdexcept>

#include "su2hom/errors.hpp"

namespace su2hom {

namespace {

void check_guard(int n, int guard, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
    if (n > guard) {
        std::ostringstream os;
        os << who << ": n = " << n << " exceeds the cell-count guard " << guard;
        throw GuardExceeded(os.str());
    }
}

// Circle-factor profile of a product cell, read from its label
// "s|c1|...|cn": +1 / -1 for the fixed 0-cells, 0 for a 1-cell.
std::vector<int> circle_profile(const std::string& label) {
    std::vector<int> out;
    std::size_t start = label.find('|');
    while (start != std::string::npos) {
        std::size_t end = label.find('|', start + 1);
        std::string part = label.substr(start + 1, end == std::string::npos
                                                       ? std::string::npos
                                                       : end - start - 1);
        if (part == "1") out.push_back(1);
        else if (part == "-1") out.push_back(-1);
        else out.push_back(0);
        start = end;
    }
    return out;
}

}  // namespace

ChainComplex blowup_complex(int n, int guard) {
    check_guard(n, guard, "blowup_complex");
    std::vector<EquivariantChainComplex> factors;
    factors.push_back(sphere_complex());
    for (int i = 0; i < n; ++i) factors.push_back(circle_complex());
    return quotient_by_gamma(tensor(factors));
}

ChainComplex collapse_to_yn(int n, int guard) {
    check_guard(n, guard, "collapse_to_yn");
    const ChainComplex blowup = blowup_complex(n, guard);
    const int top = blowup.top_degree();

    // a cell lies in the projective plane of sign vector a iff its profile
    // has no 1-cell slot; the profile then *is* a
    auto sign_index = [n](const std::vector<int>& profile) {
        int m = 0;
        for (int i = 0; i < n; ++i) m = 2 * m + (profile[i] == -1 ? 1 : 0);
        return m;  // lexicographic, +1 before -1
    };

    ChainComplex y;
    y.dims.assign(top + 1, 0);
    y.labels.assign(top + 1, {});
    y.dims[0] = 1 << n;
    for (int m = 0; m < (1 << n); ++m) {
        std::string s = "a[";
        for (int i = n - 1; i >= 0; --i) s += (m >> i) & 1 ? '-' : '+';
        y.labels[0].push_back(s + "]");
    }

    // keep every blowup cell that is not in a collapsed subcomplex
    std::vector<std::vector<int>> kept(top + 1);        // new index or -1
    std::vector<std::vector<int>> point_of(top + 1);    // collapsed 0-cell target
    for (int k = 0; k <= top; ++k) {
        kept[k].assign(blowup.dims[k], -1);
        point_of[k].assign(blowup.dims[k], -1);
        for (int j = 0; j < blowup.dims[k]; ++j) {
            const std::vector<int> profile = circle_profile(blowup.labels[k][j]);
            bool in_rp2 = true;
            for (int v : profile)
                if (v == 0) { in_rp2 = false; break; }
            if (in_rp2) {
                point_of[k][j] = sign_index(profile);
            } else {
                kept[k][j] = y.dims[k]++;
                y.labels[k].push_back(blowup.labels[k][j]);
            }
        }
    }

    y.boundaries.assign(top + 1, IntMatrix());
    y.boundaries[0] = IntMatrix(0, y.dims[0]);
    for (int k = 1; k <= top; ++k) {
        IntMatrix d(y.dims[k - 1], y.dims[k]);
        const IntMatrix bt = blowup.boundary(k).transposed();
        for (int j = 0; j < blowup.dims[k]; ++j) {
            if (kept[k][j] < 0) continue;
            for (const auto& [i, v] : bt.row(j)) {
                if (kept[k - 1][i] >= 0)
                    d.add_to(kept[k - 1][i], kept[k][j], v);
                else if (k == 1)  // boundary 0-cells map to the collapsed points
                    d.add_to(point_of[0][i], kept[1][j], v);
                // cells of a collapsed subcomplex in degree >= 1 map to zero
            }
        }
        y.boundaries[k] = std::move(d);
    }
    return y;
}

std::array<AbelianGroup, 3> rp2_local_cohomology(const IntMatrix& action) {
    const int m = action.rows();
    if (action.cols() != m) throw std::invalid_argument("rp2_local_cohomology: square action");
    if (!(action * action == IntMatrix::identity(m)))
        throw std::invalid_argument("rp2_local_cohomology: action must be an involution");
    const IntMatrix id = IntMatrix::identity(m);
    IntMatrix d0 = action - id;  // dual of the degree-1 boundary gamma - 1
    IntMatrix d1 = action;       // dual of the degree-2 boundary gamma + 1
    for (int i = 0; i < m; ++i) d1.add_to(i, i, 1);

    const IntMatrix from_nothing(m, 0);
    const IntMatrix to_nothing(0, m);
    return {
        homology_at(d0, from_nothing),
        homology_at(d1, d0),
        homology_at(to_nothing, d1),
    };
}

std::array<AbelianGroup, 3> twisted_rp2_cohomology(bool twisted) {
    IntMatrix action(1, 1);
    action.set(0, 0, twisted ? -1 : 1);
    return rp2_local_cohomology(action);
}

}  // namespace su2hom
