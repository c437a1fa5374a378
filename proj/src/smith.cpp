#include "su2hom/smith.hpp"

#include <cassert>
#include <cstdlib>
#include <limits>
#include <set>

namespace su2hom {

int SmithResult::rank() const {
    int r = 0;
    int d = std::min(S.rows(), S.cols());
    for (int k = 0; k < d; ++k)
        if (S.at(k, k) != 0) ++r;
    return r;
}

std::vector<Int> SmithResult::invariant_factors() const {
    std::vector<Int> out;
    int d = std::min(S.rows(), S.cols());
    for (int k = 0; k < d; ++k)
        if (S.at(k, k) != 0) out.push_back(S.at(k, k));
    return out;
}

std::vector<Int> SmithResult::torsion_divisors() const {
    std::vector<Int> out;
    for (const Int& d : invariant_factors())
        if (d > 1) out.push_back(d);
    return out;
}

namespace {

// Nearest-integer quotient; remainder magnitude ends up <= |d|/2.
Int div_round(const Int& a, const Int& d) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    if (2 * abs(r) > abs(d)) q += sgn(r) * sgn(d);
    return q;
}

// Elimination workspace: row maps plus per-column occupancy, so both row and
// column operations stay proportional to the number of nonzeros touched.
struct Workspace {
    int nrows, ncols;
    std::vector<std::map<int, Int>> row;  // row -> (col -> value)
    std::vector<std::set<int>> col;       // col -> rows with a nonzero
    bool track;
    IntMatrix U, V;  // row ops mirror into U, column ops into V

    explicit Workspace(const IntMatrix& m, bool accumulate)
        : nrows(m.rows()), ncols(m.cols()), row(nrows), col(ncols), track(accumulate) {
        for (int i = 0; i < nrows; ++i)
            for (const auto& [j, v] : m.row(i)) {
                row[i][j] = v;
                col[j].insert(i);
            }
        if (track) {
            U = IntMatrix::identity(nrows);
            V = IntMatrix::identity(ncols);
        }
    }

    const Int* entry(int i, int j) const {
        auto it = row[i].find(j);
        return it == row[i].end() ? nullptr : &it->second;
    }

    void put(int i, int j, const Int& v) {
        if (v == 0) {
            row[i].erase(j);
            col[j].erase(i);
        } else {
            row[i][j] = v;
            col[j].insert(i);
        }
    }

    // row[i] += c * row[k]
    void row_axpy(int i, int k, const Int& c) {
        for (const auto& [j, v] : row[k]) {
            auto it = row[i].find(j);
            Int nv = (it == row[i].end() ? Int(0) : it->second) + c * v;
            put(i, j, nv);
        }
        if (track)
            for (int j = 0; j < U.cols(); ++j) {
                const Int& ukj = U.at(k, j);
                if (ukj != 0) U.add_to(i, j, c * ukj);
            }
    }

    // col[j] += c * col[k]
    void col_axpy(int j, int k, const Int& c) {
        std::vector<int> rows_k(col[k].begin(), col[k].end());
        for (int i : rows_k) {
            const Int v = row[i][k];
            auto it = row[i].find(j);
            Int nv = (it == row[i].end() ? Int(0) : it->second) + c * v;
            put(i, j, nv);
        }
        if (track)
            for (int i = 0; i < V.rows(); ++i) {
                const Int& vik = V.at(i, k);
                if (vik != 0) V.add_to(i, j, c * vik);
            }
    }

    void swap_rows(int i, int k) {
        if (i == k) return;
        std::set<int> touched;
        for (const auto& [j, v] : row[i]) touched.insert(j);
        for (const auto& [j, v] : row[k]) touched.insert(j);
        std::swap(row[i], row[k]);
        for (int j : touched) {
            col[j].erase(i);
            col[j].erase(k);
            if (row[i].count(j)) col[j].insert(i);
            if (row[k].count(j)) col[j].insert(k);
        }
        if (track)
            for (int j = 0; j < U.cols(); ++j) {
                Int a = U.at(i, j), b = U.at(k, j);
                U.set(i, j, b);
                U.set(k, j, a);
            }
    }

    void swap_cols(int j, int k) {
        if (j == k) return;
        std::set<int> touched = col[j];
        touched.insert(col[k].begin(), col[k].end());
        for (int i : touched) {
            auto itj = row[i].find(j);
            auto itk = row[i].find(k);
            Int a = itj == row[i].end() ? Int(0) : itj->second;
            Int b = itk == row[i].end() ? Int(0) : itk->second;
            if (b == 0) row[i].erase(j); else row[i][j] = b;
            if (a == 0) row[i].erase(k); else row[i][k] = a;
        }
        std::swap(col[j], col[k]);
        if (track)
            for (int i = 0; i < V.rows(); ++i) {
                Int a = V.at(i, j), b = V.at(i, k);
                V.set(i, j, b);
                V.set(i, k, a);
            }
    }

    void negate_row(int i) {
        for (auto& [j, v] : row[i]) v = -v;
        if (track)
            for (int j = 0; j < U.cols(); ++j) {
                const Int& v = U.at(i, j);
                if (v != 0) U.set(i, j, -v);
            }
    }

    // Smallest-magnitude nonzero entry in the region (>= t, >= t);
    // ties broken by the Markowitz count (nnz(row)-1)*(nnz(col)-1).
    bool select_pivot(int t, int& pi, int& pj) const {
        bool found = false;
        Int best_mag;
        long best_cost = 0;
        for (int i = t; i < nrows; ++i) {
            for (const auto& [j, v] : row[i]) {
                if (j < t) continue;
                Int mag = abs(v);
                long cost = static_cast<long>(row[i].size() - 1) *
                            static_cast<long>(col[j].size() - 1);
                if (!found || mag < best_mag || (mag == best_mag && cost < best_cost)) {
                    found = true;
                    best_mag = mag;
                    best_cost = cost;
                    pi = i;
                    pj = j;
                }
            }
        }
        return found;
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m, bool accumulate) {
    Workspace w(m, accumulate);
    const int dmax = std::min(w.nrows, w.ncols);

    for (int t = 0; t < dmax; ++t) {
        int pi, pj;
        if (!w.select_pivot(t, pi, pj)) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        // Reduce until the pivot divides (and clears) its row and column,
        // then until it divides everything left in the trailing block.
        for (;;) {
            bool swapped = true;
            while (swapped) {
                swapped = false;
                // column pass
                for (;;) {
                    int i = -1;
                    for (int r : w.col[t])
                        if (r != t && r > t - 1) { i = r; break; }
                    if (i < 0) break;
                    Int q = div_round(w.row[i][t], w.row[t][t]);
                    if (q != 0) w.row_axpy(i, t, -q);
                    if (w.entry(i, t)) {  // remainder is a strictly smaller pivot
                        w.swap_rows(i, t);
                        swapped = true;
                    }
                }
                // row pass
                for (;;) {
                    int j = -1;
                    for (const auto& [c, v] : w.row[t])
                        if (c != t) { j = c; break; }
                    if (j < 0) break;
                    Int q = div_round(w.row[t][j], w.row[t][t]);
                    if (q != 0) w.col_axpy(j, t, -q);
                    if (w.entry(t, j)) {
                        w.swap_cols(j, t);
                        swapped = true;
                        break;  // column may be dirty again
                    }
                }
                if (swapped) continue;
                bool col_clean = true;
                for (int r : w.col[t])
                    if (r != t) { col_clean = false; break; }
                if (col_clean && w.row[t].size() == 1) break;
            }

            // Divisor-chain repair: fold any trailing entry the pivot does not
            // divide into row t and keep reducing.
            const Int d = w.row[t][t];
            int bad_row = -1;
            for (int i = t + 1; i < w.nrows && bad_row < 0; ++i)
                for (const auto& [j, v] : w.row[i]) {
                    if (j <= t) continue;
                    if (v % d != 0) { bad_row = i; break; }
                }
            if (bad_row < 0) break;
            w.row_axpy(t, bad_row, 1);
        }

        if (w.row[t][t] < 0) w.negate_row(t);
    }

    SmithResult res;
    res.S = IntMatrix(w.nrows, w.ncols);
    for (int k = 0; k < dmax; ++k)
        if (const Int* v = w.entry(k, k)) res.S.set(k, k, *v);
    if (accumulate) {
        res.U = std::move(w.U);
        res.V = std::move(w.V);
#ifndef NDEBUG
        assert((*res.U) * m * (*res.V) == res.S);
#endif
    }
    return res;
}

int integer_rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

}  // namespace su2hom
