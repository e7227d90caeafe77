#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cryptolab/gf2/bit_vector.hpp"

namespace cryptolab::gf2 {

// Dense row-major matrix over GF(2).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(BitVector::word_count(cols)), words_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix random(std::size_t rows, std::size_t cols, std::mt19937_64& rng);
  // Columns are the given vectors.
  static BitMatrix from_columns(const std::vector<BitVector>& cols);

  // Text format: first line "rows cols", then `rows` lines of '0'/'1'.
  static BitMatrix parse(const std::string& text);
  std::string to_text() const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * stride_ + (c >> 6)] >> (c & 63)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t mask = std::uint64_t(1) << (c & 63);
    if (v)
      words_[r * stride_ + (c >> 6)] |= mask;
    else
      words_[r * stride_ + (c >> 6)] &= ~mask;
  }

  BitVector row(std::size_t r) const;
  void xor_row_into(std::size_t src, std::size_t dst);  // dst ^= src
  void swap_rows(std::size_t a, std::size_t b);

  // m * x for x of length cols().
  BitVector multiply(const BitVector& x) const;

  // Row-space dimension; deterministic leftmost-pivot elimination on a copy.
  std::size_t rank() const;

  // Linearly independent basis of {x : m x = 0}; size() == cols - rank().
  std::vector<BitVector> kernel_basis() const;

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cryptolab::gf2
