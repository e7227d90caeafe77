#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cryptolab/boolfun/boolean_function.hpp"

namespace cryptolab::boolfun {

// F: F_2^n -> F_2^m as a lookup table of 2^n entries in [0, 2^m). Output bits
// follow the input convention: coordinate f1 is the most significant output
// bit, fm the least significant.
class VectorialFunction {
 public:
  VectorialFunction() = default;
  VectorialFunction(unsigned n, unsigned m, std::vector<std::uint32_t> table);

  // Comma-separated decimal entries; n derived from the count, m given.
  static VectorialFunction from_lut(std::string_view csv, unsigned m);

  unsigned input_bits() const { return n_; }
  unsigned output_bits() const { return m_; }
  std::uint32_t operator()(std::uint32_t x) const { return table_[x]; }
  const std::vector<std::uint32_t>& table() const { return table_; }

  // F_v = <v, F>; rejects v == 0.
  BooleanFunction component(std::uint32_t v) const;
  BooleanFunction coordinate(unsigned j) const;  // 1-based, f1 ... fm

  bool is_permutation() const;

 private:
  unsigned n_ = 0, m_ = 0;
  std::vector<std::uint32_t> table_;
};

// max over a != 0, b of #{x : F(x) ^ F(x^a) = b}.
unsigned differential_uniformity(const VectorialFunction& f);

// min over nonzero components of their nonlinearity.
unsigned nonlinearity(const VectorialFunction& f);

// F(x) = f(x) || f(L x) || ... || f(L^{m-1} x), where L rotates the variable
// tuple (x1,...,xn) left by one position.
VectorialFunction rotational_construction(const BooleanFunction& f, unsigned m);

}  // namespace cryptolab::boolfun
