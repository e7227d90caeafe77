#include "cryptolab/gf2/bit_matrix.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cryptolab::gf2 {

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::random(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t w = 0; w < m.stride_; ++w) m.words_[r * m.stride_ + w] = rng();
    // clear the tail beyond cols
    if (cols % 64) m.words_[r * m.stride_ + m.stride_ - 1] &= (std::uint64_t(1) << (cols % 64)) - 1;
  }
  return m;
}

BitMatrix BitMatrix::from_columns(const std::vector<BitVector>& cols) {
  if (cols.empty()) return {};
  std::size_t rows = cols[0].size();
  BitMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c].get(r));
  }
  return m;
}

BitMatrix BitMatrix::parse(const std::string& text) {
  std::istringstream in(text);
  std::size_t rows, cols;
  if (!(in >> rows >> cols)) throw std::invalid_argument("matrix header must be 'rows cols'");
  BitMatrix m(rows, cols);
  std::string line;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!(in >> line) || line.size() != cols)
      throw std::invalid_argument("matrix row " + std::to_string(r) + " malformed");
    for (std::size_t c = 0; c < cols; ++c) {
      if (line[c] == '1')
        m.set(r, c, true);
      else if (line[c] != '0')
        throw std::invalid_argument("matrix entries must be '0'/'1'");
    }
  }
  return m;
}

std::string BitMatrix::to_text() const {
  std::ostringstream out;
  out << rows_ << ' ' << cols_ << '\n';
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out << (get(r, c) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  for (std::size_t w = 0; w < stride_; ++w) v.words()[w] = words_[r * stride_ + w];
  return v;
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
  for (std::size_t w = 0; w < stride_; ++w) words_[dst * stride_ + w] ^= words_[src * stride_ + w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t w = 0; w < stride_; ++w)
    std::swap(words_[a * stride_ + w], words_[b * stride_ + w]);
}

BitVector BitMatrix::multiply(const BitVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in multiply");
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < stride_; ++w) acc ^= words_[r * stride_ + w] & x.words()[w];
    if (std::popcount(acc) & 1) out.set(r, true);
  }
  return out;
}

std::size_t BitMatrix::rank() const {
  BitMatrix m = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && !m.get(pivot, col)) ++pivot;
    if (pivot == rows_) continue;
    m.swap_rows(pivot, rank);
    for (std::size_t r = 0; r < rows_; ++r)
      if (r != rank && m.get(r, col)) m.xor_row_into(rank, r);
    ++rank;
  }
  return rank;
}

std::vector<BitVector> BitMatrix::kernel_basis() const {
  BitMatrix m = *this;
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && !m.get(pivot, col)) ++pivot;
    if (pivot == rows_) continue;
    m.swap_rows(pivot, rank);
    for (std::size_t r = 0; r < rows_; ++r)
      if (r != rank && m.get(r, col)) m.xor_row_into(rank, r);
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(cols_);
    v.set(free, true);
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      if (m.get(r, free)) v.set(pivot_col[r], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cryptolab::gf2
