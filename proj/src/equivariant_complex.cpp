#include "su2hom/equivariant_complex.hpp"

#include <sstream>
#include <stdexcept>

#include "su2hom/errors.hpp"

namespace su2hom {

int EquivariantChainComplex::dim(int k) const {
    if (k < 0 || k > top_degree()) return 0;
    return static_cast<int>(cells[k].size());
}

IntMatrix EquivariantChainComplex::boundary(int k) const {
    if (k >= 1 && k < static_cast<int>(boundaries.size())) return boundaries[k];
    return IntMatrix(dim(k - 1), dim(k));
}

namespace {

// Signed permutation: column j holds exactly one entry +-1 at (image, j).
std::pair<int, int> image_of(const IntMatrix& g, int j) {
    int row = -1, sign = 0;
    for (int i = 0; i < g.rows(); ++i) {
        const Int& v = g.at(i, j);
        if (v == 0) continue;
        if (row >= 0 || (v != 1 && v != -1))
            throw std::invalid_argument("gamma is not a signed permutation");
        row = i;
        sign = (v == 1) ? 1 : -1;
    }
    if (row < 0) throw std::invalid_argument("gamma has an empty column");
    return {row, sign};
}

// column -> (image row, sign) for a signed permutation matrix
std::vector<std::pair<int, int>> permutation_table(const IntMatrix& g) {
    std::vector<std::pair<int, int>> out(g.cols(), {-1, 0});
    for (int i = 0; i < g.rows(); ++i)
        for (const auto& [j, v] : g.row(i)) {
            if (out[j].first >= 0 || (v != 1 && v != -1))
                throw std::invalid_argument("gamma is not a signed permutation");
            out[j] = {i, v == 1 ? 1 : -1};
        }
    for (const auto& [i, s] : out)
        if (i < 0) throw std::invalid_argument("gamma has an empty column");
    return out;
}

}  // namespace

void EquivariantChainComplex::validate() const {
    if (cells.empty()) throw std::invalid_argument("EquivariantChainComplex: no degrees");
    if (gamma.size() != cells.size() || boundaries.size() != cells.size())
        throw std::invalid_argument("EquivariantChainComplex: per-degree data misaligned");
    for (int k = 0; k <= top_degree(); ++k) {
        const IntMatrix& g = gamma[k];
        if (g.rows() != dim(k) || g.cols() != dim(k))
            throw std::invalid_argument("gamma shape mismatch");
        if (!(g * g == IntMatrix::identity(dim(k))))
            throw std::invalid_argument("gamma^2 != id");
        for (int j = 0; j < dim(k); ++j) {
            auto [img, sign] = image_of(g, j);
            if (cells[k][j].tag == OrbitTag::Fixed && (img != j || sign != 1))
                throw std::invalid_argument("Fixed cell not fixed with sign +1");
            if (cells[k][j].tag == OrbitTag::FreeOrbit && img == j)
                throw std::invalid_argument("FreeOrbit cell fixed by gamma");
        }
    }
    underlying().validate();  // shapes and boundary * boundary = 0
    for (int k = 1; k <= top_degree(); ++k)
        if (!(gamma[k - 1] * boundaries[k] == boundaries[k] * gamma[k]))
            throw std::invalid_argument("gamma does not commute with the boundary");
}

ChainComplex EquivariantChainComplex::underlying() const {
    ChainComplex c;
    for (int k = 0; k <= top_degree(); ++k) {
        c.dims.push_back(dim(k));
        std::vector<std::string> names;
        for (const auto& cell : cells[k]) names.push_back(cell.label);
        c.labels.push_back(std::move(names));
    }
    c.boundaries.resize(cells.size());
    for (int k = 1; k <= top_degree(); ++k) c.boundaries[k] = boundaries[k];
    if (!c.boundaries.empty()) c.boundaries[0] = IntMatrix(0, dim(0));
    return c;
}

EquivariantChainComplex sphere_complex() {
    EquivariantChainComplex s;
    s.cells = {
        {{OrbitTag::FreeOrbit, "p"}, {OrbitTag::FreeOrbit, "gp"}},
        {{OrbitTag::FreeOrbit, "e"}, {OrbitTag::FreeOrbit, "ge"}},
        {{OrbitTag::FreeOrbit, "f"}, {OrbitTag::FreeOrbit, "gf"}},
    };
    IntMatrix swap2(2, 2);
    swap2.set(0, 1, 1);
    swap2.set(1, 0, 1);
    s.gamma = {swap2, swap2, swap2};

    // de = gp - p, d(ge) = p - gp;  df = e + ge, d(gf) = ge + e
    IntMatrix d1(2, 2), d2(2, 2);
    d1.set(0, 0, -1); d1.set(1, 0, 1);
    d1.set(0, 1, 1);  d1.set(1, 1, -1);
    d2.set(0, 0, 1);  d2.set(1, 0, 1);
    d2.set(0, 1, 1);  d2.set(1, 1, 1);
    s.boundaries = {IntMatrix(0, 2), d1, d2};
    return s;
}

EquivariantChainComplex circle_complex() {
    EquivariantChainComplex c;
    c.cells = {
        {{OrbitTag::Fixed, "1"}, {OrbitTag::Fixed, "-1"}},
        {{OrbitTag::FreeOrbit, "e"}, {OrbitTag::FreeOrbit, "ge"}},
    };
    IntMatrix swap2(2, 2);
    swap2.set(0, 1, 1);
    swap2.set(1, 0, 1);
    c.gamma = {IntMatrix::identity(2), swap2};

    // de = d(ge) = (-1) - (+1); gamma negates the fundamental class e - ge
    IntMatrix d1(2, 2);
    d1.set(0, 0, -1); d1.set(1, 0, 1);
    d1.set(0, 1, -1); d1.set(1, 1, 1);
    c.boundaries = {IntMatrix(0, 2), d1};
    return c;
}

EquivariantChainComplex tensor(const EquivariantChainComplex& a,
                               const EquivariantChainComplex& b) {
    const int atop = a.top_degree(), btop = b.top_degree();
    const int top = atop + btop;
    EquivariantChainComplex t;
    t.cells.assign(top + 1, {});

    // position of cell (p,i)x(q,j) inside degree p+q; enumeration is p
    // ascending, then i, then j, so tuples are ordered lexicographically
    std::vector<std::vector<std::vector<std::vector<int>>>> pos(atop + 1);
    for (int p = 0; p <= atop; ++p) {
        pos[p].assign(a.dim(p), std::vector<std::vector<int>>(btop + 1));
        for (int i = 0; i < a.dim(p); ++i)
            for (int q = 0; q <= btop; ++q) pos[p][i][q].assign(b.dim(q), -1);
    }
    for (int k = 0; k <= top; ++k)
        for (int p = std::max(0, k - btop); p <= std::min(k, atop); ++p) {
            const int q = k - p;
            for (int i = 0; i < a.dim(p); ++i)
                for (int j = 0; j < b.dim(q); ++j) {
                    pos[p][i][q][j] = static_cast<int>(t.cells[k].size());
                    OrbitTag tag = (a.cells[p][i].tag == OrbitTag::Fixed &&
                                    b.cells[q][j].tag == OrbitTag::Fixed)
                                       ? OrbitTag::Fixed
                                       : OrbitTag::FreeOrbit;
                    t.cells[k].push_back({tag, a.cells[p][i].label + "|" + b.cells[q][j].label});
                }
        }

    std::vector<std::vector<std::pair<int, int>>> ga(atop + 1), gb(btop + 1);
    for (int p = 0; p <= atop; ++p) ga[p] = permutation_table(a.gamma[p]);
    for (int q = 0; q <= btop; ++q) gb[q] = permutation_table(b.gamma[q]);
    std::vector<IntMatrix> da_t(atop + 1), db_t(btop + 1);
    for (int p = 0; p <= atop; ++p) da_t[p] = a.boundary(p).transposed();
    for (int q = 0; q <= btop; ++q) db_t[q] = b.boundary(q).transposed();

    t.boundaries.assign(top + 1, IntMatrix());
    t.gamma.assign(top + 1, IntMatrix());
    for (int k = 0; k <= top; ++k) {
        IntMatrix g(t.dim(k), t.dim(k));
        IntMatrix d(k > 0 ? t.dim(k - 1) : 0, t.dim(k));
        for (int p = std::max(0, k - btop); p <= std::min(k, atop); ++p) {
            const int q = k - p;
            const Int koszul = (p % 2 == 0) ? 1 : -1;
            for (int i = 0; i < a.dim(p); ++i)
                for (int j = 0; j < b.dim(q); ++j) {
                    const int col = pos[p][i][q][j];
                    const auto& [i2, sa] = ga[p][i];
                    const auto& [j2, sb] = gb[q][j];
                    g.set(pos[p][i2][q][j2], col, Int(sa * sb));
                    if (k == 0) continue;
                    // d(a x b) = da x b + (-1)^p a x db
                    if (p > 0)
                        for (const auto& [i3, v] : da_t[p].row(i))
                            d.add_to(pos[p - 1][i3][q][j], col, v);
                    if (q > 0)
                        for (const auto& [j3, v] : db_t[q].row(j))
                            d.add_to(pos[p][i][q - 1][j3], col, koszul * v);
                }
        }
        t.gamma[k] = std::move(g);
        t.boundaries[k] = std::move(d);
    }
    t.boundaries[0] = IntMatrix(0, t.dim(0));
    return t;
}

EquivariantChainComplex tensor(const std::vector<EquivariantChainComplex>& factors) {
    if (factors.empty()) throw std::invalid_argument("tensor: no factors");
    EquivariantChainComplex acc = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor(acc, factors[i]);
    return acc;
}

ChainComplex quotient_by_gamma(const EquivariantChainComplex& c) {
    const int top = c.top_degree();
    std::vector<std::vector<int>> new_index(top + 1);  // old cell -> orbit index
    std::vector<std::vector<int>> push_sign(top + 1);  // old cell -> sign of its class
    std::vector<std::vector<bool>> is_rep(top + 1);
    ChainComplex q;
    q.dims.assign(top + 1, 0);
    q.labels.assign(top + 1, {});
    for (int k = 0; k <= top; ++k) {
        const auto table = permutation_table(c.gamma[k]);
        new_index[k].assign(c.dim(k), -1);
        push_sign[k].assign(c.dim(k), 0);
        is_rep[k].assign(c.dim(k), false);
        for (int j = 0; j < c.dim(k); ++j) {
            if (c.cells[k][j].tag == OrbitTag::Fixed) {
                std::ostringstream os;
                os << "quotient_by_gamma: fixed cell '" << c.cells[k][j].label
                   << "' in degree " << k;
                throw ActionNotFree(os.str());
            }
            if (new_index[k][j] >= 0) continue;  // already covered as a partner
            const auto& [img, sign] = table[j];
            if (img == j) throw ActionNotFree("quotient_by_gamma: cell fixed by gamma");
            // gamma(rep) = sign * partner, so downstairs [partner] = sign * [rep]
            const int idx = q.dims[k]++;
            new_index[k][j] = idx;
            push_sign[k][j] = 1;
            is_rep[k][j] = true;
            new_index[k][img] = idx;
            push_sign[k][img] = sign;
            q.labels[k].push_back(c.cells[k][j].label);
        }
    }
    q.boundaries.assign(top + 1, IntMatrix());
    q.boundaries[0] = IntMatrix(0, q.dims[0]);
    for (int k = 1; k <= top; ++k) {
        IntMatrix d(q.dims[k - 1], q.dims[k]);
        const IntMatrix bt = c.boundary(k).transposed();
        for (int j = 0; j < c.dim(k); ++j) {
            if (!is_rep[k][j]) continue;
            for (const auto& [i, v] : bt.row(j))
                d.add_to(new_index[k - 1][i], new_index[k][j], v * push_sign[k - 1][i]);
        }
        q.boundaries[k] = std::move(d);
    }
    return q;
}

}  // namespace su2hom
