#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cryptolab::latinsq {

// n x n array over 0..n-1; every row and column a permutation.
class LatinSquare {
 public:
  LatinSquare(unsigned order, std::vector<std::uint8_t> cells);  // throws if not Latin

  static bool is_latin(unsigned order, const std::vector<std::uint8_t>& cells);
  static LatinSquare cyclic(unsigned order);  // L[i][j] = (i + j) mod n
  static LatinSquare random(unsigned order, std::uint64_t seed);

  // n lines of n digits (n <= 10), or space-separated entries.
  static LatinSquare parse(const std::string& text);
  std::string to_text() const;

  unsigned order() const { return n_; }
  std::uint8_t at(unsigned row, unsigned col) const { return cells_[row * n_ + col]; }
  const std::vector<std::uint8_t>& cells() const { return cells_; }

  // Column permutation row -> entry.
  std::vector<std::uint8_t> column_permutation(unsigned col) const;

  bool operator==(const LatinSquare&) const = default;

 private:
  unsigned n_;
  std::vector<std::uint8_t> cells_;
};

struct Challenge {
  std::uint8_t a, b, c, d;  // requires a != b, b != c, c != d
};

bool valid_challenge(const Challenge& q, unsigned order);

// t1 = L[a][b], t2 = L[t1][c], t3 = L[t2][d] (0-indexed); returns t3.
std::uint8_t respond(const LatinSquare& square, const Challenge& q);

// Same response via composition of column permutations; kept as the algebraic
// cross-check of respond().
std::uint8_t respond_by_composition(const LatinSquare& square, const Challenge& q);

}  // namespace cryptolab::latinsq
