#ifndef SU2HOM_INT_MATRIX_HPP
#define SU2HOM_INT_MATRIX_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace su2hom {

using Int = mpz_class;

// Sparse integer matrix with exact (arbitrary precision) entries.
// Rows are kept as ordered column->value maps; zero entries are never stored,
// so iteration order (and everything derived from it) is deterministic.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);
    // entries: list of (row, col, value) triples; later triples accumulate.
    static IntMatrix from_triples(int rows, int cols,
                                  const std::vector<std::tuple<int, int, Int>>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Int& at(int i, int j) const;        // zero when absent
    void set(int i, int j, const Int& v);     // erases the entry when v == 0
    void add_to(int i, int j, const Int& v);  // entry += v

    const std::map<int, Int>& row(int i) const { return data_[i]; }

    bool is_zero() const;
    std::size_t nnz() const;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;

    bool operator==(const IntMatrix& rhs) const = default;

    std::string to_string() const;  // dense, for diagnostics only

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::map<int, Int>> data_;
};

}  // namespace su2hom

#endif
