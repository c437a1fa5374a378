#include "su2hom/mod2.hpp"

#include <stdexcept>

namespace su2hom {

Mod2Matrix::Mod2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      bits_(static_cast<std::size_t>(rows) * ((cols + 63) / 64), 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mod2Matrix: negative shape");
}

Mod2Matrix Mod2Matrix::from_int_matrix(const IntMatrix& m) {
    Mod2Matrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i))
            if (mpz_odd_p(v.get_mpz_t())) out.flip(i, j);
    return out;
}

bool Mod2Matrix::get(int i, int j) const {
    return (bits_[static_cast<std::size_t>(i) * words_ + j / 64] >> (j % 64)) & 1u;
}

void Mod2Matrix::set(int i, int j, bool v) {
    if (get(i, j) != v) flip(i, j);
}

void Mod2Matrix::flip(int i, int j) {
    bits_[static_cast<std::size_t>(i) * words_ + j / 64] ^= (std::uint64_t{1} << (j % 64));
}

int Mod2Matrix::rank() const {
    std::vector<std::uint64_t> work = bits_;
    auto word = [&](int i, int w) -> std::uint64_t& {
        return work[static_cast<std::size_t>(i) * words_ + w];
    };
    int rank = 0;
    for (int j = 0; j < cols_ && rank < rows_; ++j) {
        const int w = j / 64;
        const std::uint64_t mask = std::uint64_t{1} << (j % 64);
        int pivot = -1;
        for (int i = rank; i < rows_; ++i)
            if (word(i, w) & mask) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int t = 0; t < words_; ++t) std::swap(word(pivot, t), word(rank, t));
        for (int i = 0; i < rows_; ++i) {
            if (i == rank || !(word(i, w) & mask)) continue;
            for (int t = 0; t < words_; ++t) word(i, t) ^= word(rank, t);
        }
        ++rank;
    }
    return rank;
}

int mod2_rank(const IntMatrix& m) { return Mod2Matrix::from_int_matrix(m).rank(); }

}  // namespace su2hom
