#ifndef SU2HOM_MOD2_HPP
#define SU2HOM_MOD2_HPP

#include <cstdint>
#include <vector>

#include "su2hom/int_matrix.hpp"

namespace su2hom {

// Dense bit matrix over GF(2); rows are packed into 64-bit words.
class Mod2Matrix {
  public:
    Mod2Matrix() = default;
    Mod2Matrix(int rows, int cols);

    static Mod2Matrix from_int_matrix(const IntMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int i, int j) const;
    void set(int i, int j, bool v);
    void flip(int i, int j);

    int rank() const;  // Gaussian elimination on a copy

    bool operator==(const Mod2Matrix& rhs) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;  // row-major, words_ words per row
};

int mod2_rank(const IntMatrix& m);

}  // namespace su2hom

#endif
