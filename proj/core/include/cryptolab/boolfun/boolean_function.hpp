#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cryptolab/gf2/bit_vector.hpp"

namespace cryptolab::boolfun {

class BooleanFunction;

// Algebraic normal form: coefficient vector indexed by monomial mask. With
// inputs indexed so that x1 is the most significant bit, monomial mask u
// stands for the product of the variables in u, and evaluates to 1 at x iff
// (x & u) == u.
struct AnfForm {
  unsigned n = 0;
  gf2::BitVector coefficients;  // length 2^n

  unsigned degree() const;  // 0 for the zero function
  BooleanFunction to_function() const;
};

// Truth-table Boolean function of n variables. Input index i encodes the
// assignment (x1,...,xn) with xn as the least significant bit of i, so the
// table read left to right is f(0...0), f(0...01), ...
class BooleanFunction {
 public:
  BooleanFunction() = default;
  BooleanFunction(unsigned n, gf2::BitVector truth_table);

  static BooleanFunction constant(unsigned n, bool value);
  static BooleanFunction from_bits(std::string_view bits);  // length must be 2^n
  // Hex value vector, most significant nibble first, whitespace ignored.
  static BooleanFunction from_hex(std::string_view hex);

  unsigned arity() const { return n_; }
  std::size_t domain_size() const { return std::size_t(1) << n_; }
  bool eval(std::uint32_t x) const { return tt_.get(x); }
  const gf2::BitVector& truth_table() const { return tt_; }

  BooleanFunction complement() const;  // f ^ 1

  AnfForm to_anf() const;
  static BooleanFunction from_anf(const AnfForm& a) { return a.to_function(); }

  bool operator==(const BooleanFunction&) const = default;

 private:
  unsigned n_ = 0;
  gf2::BitVector tt_;
};

// W_f(a) = sum_x (-1)^(f(x) + <a,x>), indexed by a.
std::vector<std::int32_t> walsh_spectrum(const BooleanFunction& f);

// 2^(n-1) - max|W|/2.
unsigned nonlinearity(const BooleanFunction& f);

}  // namespace cryptolab::boolfun
