#include "su2hom/int_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace su2hom {

namespace {
const Int kZero = 0;
}

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative shape");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i][i] = 1;
    return m;
}

IntMatrix IntMatrix::from_triples(int rows, int cols,
                                  const std::vector<std::tuple<int, int, Int>>& entries) {
    IntMatrix m(rows, cols);
    for (const auto& [i, j, v] : entries) m.add_to(i, j, v);
    return m;
}

const Int& IntMatrix::at(int i, int j) const {
    const auto& r = data_.at(i);
    auto it = r.find(j);
    return it == r.end() ? kZero : it->second;
}

void IntMatrix::set(int i, int j, const Int& v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("IntMatrix::set: index out of range");
    if (v == 0)
        data_[i].erase(j);
    else
        data_[i][j] = v;
}

void IntMatrix::add_to(int i, int j, const Int& v) {
    if (v == 0) return;
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("IntMatrix::add_to: index out of range");
    auto [it, inserted] = data_[i].try_emplace(j, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) data_[i].erase(it);
    }
}

bool IntMatrix::is_zero() const {
    for (const auto& r : data_)
        if (!r.empty()) return false;
    return true;
}

std::size_t IntMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) t.data_[j][i] = v;
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix::operator*: shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [k, a] : data_[i])
            for (const auto& [j, b] : rhs.data_[k]) out.add_to(i, j, a * b);
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntMatrix::operator-: shape mismatch");
    IntMatrix out = *this;
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : rhs.data_[i]) out.add_to(i, j, -v);
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

}  // namespace su2hom
