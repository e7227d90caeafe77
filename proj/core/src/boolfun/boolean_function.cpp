#include "cryptolab/boolfun/boolean_function.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace cryptolab::boolfun {
namespace {

unsigned arity_for_table(std::size_t len) {
  if (len == 0 || (len & (len - 1)) != 0)
    throw std::invalid_argument("truth table length must be a power of two");
  return static_cast<unsigned>(std::countr_zero(len));
}

// In-place Mobius transform; an involution over GF(2).
void mobius(gf2::BitVector& v, unsigned n) {
  for (unsigned b = 0; b < n; ++b) {
    std::size_t step = std::size_t(1) << b;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i & step) {
        if (v.get(i ^ step)) v.flip(i);
      }
  }
}

}  // namespace

BooleanFunction::BooleanFunction(unsigned n, gf2::BitVector truth_table)
    : n_(n), tt_(std::move(truth_table)) {
  if (tt_.size() != (std::size_t(1) << n_))
    throw std::invalid_argument("truth table length must be 2^n");
}

BooleanFunction BooleanFunction::constant(unsigned n, bool value) {
  gf2::BitVector tt(std::size_t(1) << n);
  if (value)
    for (std::size_t i = 0; i < tt.size(); ++i) tt.set(i, true);
  return BooleanFunction(n, std::move(tt));
}

BooleanFunction BooleanFunction::from_bits(std::string_view bits) {
  auto tt = gf2::BitVector::from_string(bits);
  return BooleanFunction(arity_for_table(tt.size()), std::move(tt));
}

BooleanFunction BooleanFunction::from_hex(std::string_view hex) {
  auto tt = gf2::BitVector::from_hex(hex);
  return BooleanFunction(arity_for_table(tt.size()), std::move(tt));
}

BooleanFunction BooleanFunction::complement() const {
  gf2::BitVector tt = tt_;
  for (std::size_t i = 0; i < tt.size(); ++i) tt.flip(i);
  return BooleanFunction(n_, std::move(tt));
}

AnfForm BooleanFunction::to_anf() const {
  AnfForm a;
  a.n = n_;
  a.coefficients = tt_;
  mobius(a.coefficients, n_);
  return a;
}

unsigned AnfForm::degree() const {
  unsigned deg = 0;
  for (std::size_t u = 0; u < coefficients.size(); ++u)
    if (coefficients.get(u)) deg = std::max<unsigned>(deg, std::popcount(u));
  return deg;
}

BooleanFunction AnfForm::to_function() const {
  gf2::BitVector tt = coefficients;
  mobius(tt, n);
  return BooleanFunction(n, std::move(tt));
}

std::vector<std::int32_t> walsh_spectrum(const BooleanFunction& f) {
  std::size_t size = f.domain_size();
  std::vector<std::int32_t> w(size);
  for (std::size_t i = 0; i < size; ++i) w[i] = f.eval(static_cast<std::uint32_t>(i)) ? -1 : 1;
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        std::int32_t a = w[j], b = w[j + h];
        w[j] = a + b;
        w[j + h] = a - b;
      }
    }
  }
  return w;
}

unsigned nonlinearity(const BooleanFunction& f) {
  auto w = walsh_spectrum(f);
  std::int64_t best = 0;
  for (std::int32_t v : w) best = std::max<std::int64_t>(best, std::abs(static_cast<std::int64_t>(v)));
  return static_cast<unsigned>((std::int64_t(1) << f.arity()) / 2 - best / 2);
}

}  // namespace cryptolab::boolfun
