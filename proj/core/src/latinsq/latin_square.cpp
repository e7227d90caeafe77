#include "cryptolab/latinsq/latin_square.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cryptolab::latinsq {

LatinSquare::LatinSquare(unsigned order, std::vector<std::uint8_t> cells)
    : n_(order), cells_(std::move(cells)) {
  if (!is_latin(n_, cells_)) throw std::invalid_argument("not a latin square");
}

bool LatinSquare::is_latin(unsigned order, const std::vector<std::uint8_t>& cells) {
  if (order == 0 || cells.size() != std::size_t(order) * order) return false;
  std::vector<bool> seen(order);
  for (unsigned r = 0; r < order; ++r) {
    std::fill(seen.begin(), seen.end(), false);
    for (unsigned c = 0; c < order; ++c) {
      std::uint8_t v = cells[r * order + c];
      if (v >= order || seen[v]) return false;
      seen[v] = true;
    }
  }
  for (unsigned c = 0; c < order; ++c) {
    std::fill(seen.begin(), seen.end(), false);
    for (unsigned r = 0; r < order; ++r) {
      std::uint8_t v = cells[r * order + c];
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

LatinSquare LatinSquare::cyclic(unsigned order) {
  std::vector<std::uint8_t> cells(std::size_t(order) * order);
  for (unsigned r = 0; r < order; ++r)
    for (unsigned c = 0; c < order; ++c) cells[r * order + c] = static_cast<std::uint8_t>((r + c) % order);
  return LatinSquare(order, std::move(cells));
}

LatinSquare LatinSquare::random(unsigned order, std::uint64_t seed) {
  // Cyclic square scrambled by row/column/symbol permutations. Not uniform
  // over all squares, but plenty for soak tests.
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> rows(order), cols(order), syms(order);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  std::iota(syms.begin(), syms.end(), 0);
  std::shuffle(rows.begin(), rows.end(), rng);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::shuffle(syms.begin(), syms.end(), rng);
  std::vector<std::uint8_t> cells(std::size_t(order) * order);
  for (unsigned r = 0; r < order; ++r)
    for (unsigned c = 0; c < order; ++c)
      cells[r * order + c] = syms[(rows[r] + cols[c]) % order];
  return LatinSquare(order, std::move(cells));
}

LatinSquare LatinSquare::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) rows.push_back(line);
  }
  if (rows.empty()) throw std::invalid_argument("empty square");
  std::vector<std::uint8_t> cells;
  unsigned order = static_cast<unsigned>(rows.size());
  for (const auto& row : rows) {
    if (row.find(' ') != std::string::npos) {
      std::istringstream rs(row);
      unsigned v;
      while (rs >> v) cells.push_back(static_cast<std::uint8_t>(v));
    } else {
      for (char ch : row) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("digit rows must be 0..9");
        cells.push_back(static_cast<std::uint8_t>(ch - '0'));
      }
    }
  }
  return LatinSquare(order, std::move(cells));
}

std::string LatinSquare::to_text() const {
  std::ostringstream out;
  for (unsigned r = 0; r < n_; ++r) {
    for (unsigned c = 0; c < n_; ++c) {
      if (n_ > 10) out << unsigned(at(r, c)) << (c + 1 < n_ ? " " : "");
      else out << unsigned(at(r, c));
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::uint8_t> LatinSquare::column_permutation(unsigned col) const {
  std::vector<std::uint8_t> p(n_);
  for (unsigned r = 0; r < n_; ++r) p[r] = at(r, col);
  return p;
}

bool valid_challenge(const Challenge& q, unsigned order) {
  return q.a < order && q.b < order && q.c < order && q.d < order && q.a != q.b && q.b != q.c &&
         q.c != q.d;
}

std::uint8_t respond(const LatinSquare& square, const Challenge& q) {
  if (!valid_challenge(q, square.order())) throw std::invalid_argument("invalid challenge");
  std::uint8_t t1 = square.at(q.a, q.b);
  std::uint8_t t2 = square.at(t1, q.c);
  return square.at(t2, q.d);
}

std::uint8_t respond_by_composition(const LatinSquare& square, const Challenge& q) {
  if (!valid_challenge(q, square.order())) throw std::invalid_argument("invalid challenge");
  auto sb = square.column_permutation(q.b);
  auto sc = square.column_permutation(q.c);
  auto sd = square.column_permutation(q.d);
  return sd[sc[sb[q.a]]];
}

}  // namespace cryptolab::latinsq
