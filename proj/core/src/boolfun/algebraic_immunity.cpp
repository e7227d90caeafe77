#include "cryptolab/boolfun/algebraic_immunity.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "cryptolab/gf2/bit_matrix.hpp"

namespace cryptolab::boolfun {
namespace {

std::vector<std::uint32_t> monomials_up_to(unsigned n, unsigned d) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t u = 0; u < (std::uint32_t(1) << n); ++u)
    if (static_cast<unsigned>(std::popcount(u)) <= d) masks.push_back(u);
  return masks;
}

}  // namespace

bool has_nonzero_annihilator(const BooleanFunction& f, unsigned d) {
  const unsigned n = f.arity();
  auto monomials = monomials_up_to(n, d);
  std::vector<std::uint32_t> support;
  for (std::uint32_t x = 0; x < (std::uint32_t(1) << n); ++x)
    if (f.eval(x)) support.push_back(x);
  if (support.empty()) return true;  // any nonzero g annihilates

  gf2::BitMatrix m(support.size(), monomials.size());
  for (std::size_t r = 0; r < support.size(); ++r)
    for (std::size_t c = 0; c < monomials.size(); ++c)
      if ((support[r] & monomials[c]) == monomials[c]) m.set(r, c, true);
  return m.rank() < monomials.size();
}

unsigned algebraic_immunity(const BooleanFunction& f) {
  const unsigned n = f.arity();
  BooleanFunction g = f.complement();
  for (unsigned d = 0; d <= n; ++d)
    if (has_nonzero_annihilator(f, d) || has_nonzero_annihilator(g, d)) return d;
  return n;  // unreachable: degree n always admits an annihilator
}

unsigned component_algebraic_immunity(const VectorialFunction& f) {
  unsigned best = f.input_bits();
  for (std::uint32_t v = 1; v < (std::uint32_t(1) << f.output_bits()); ++v)
    best = std::min(best, algebraic_immunity(f.component(v)));
  return best;
}

}  // namespace cryptolab::boolfun
