#include "cryptolab/boolfun/vectorial_function.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

#include "cryptolab/support/hex.hpp"

namespace cryptolab::boolfun {

VectorialFunction::VectorialFunction(unsigned n, unsigned m, std::vector<std::uint32_t> table)
    : n_(n), m_(m), table_(std::move(table)) {
  if (table_.size() != (std::size_t(1) << n_))
    throw std::invalid_argument("lookup table length must be 2^n");
  for (std::uint32_t v : table_)
    if (v >= (std::uint32_t(1) << m_)) throw std::invalid_argument("table entry out of range");
}

VectorialFunction VectorialFunction::from_lut(std::string_view csv, unsigned m) {
  std::vector<std::uint32_t> vals;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string tok = support::trim(csv.substr(pos, comma - pos));
    if (!tok.empty()) {
      std::uint32_t v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw std::invalid_argument("bad LUT entry: " + tok);
      vals.push_back(v);
    }
    pos = comma + 1;
  }
  if (vals.empty() || (vals.size() & (vals.size() - 1)) != 0)
    throw std::invalid_argument("LUT length must be a power of two");
  unsigned n = static_cast<unsigned>(std::countr_zero(vals.size()));
  return VectorialFunction(n, m, std::move(vals));
}

BooleanFunction VectorialFunction::component(std::uint32_t v) const {
  if (v == 0) throw std::invalid_argument("component mask must be nonzero");
  if (v >= (std::uint32_t(1) << m_)) throw std::invalid_argument("component mask out of range");
  gf2::BitVector tt(table_.size());
  for (std::size_t x = 0; x < table_.size(); ++x)
    if (std::popcount(table_[x] & v) & 1) tt.set(x, true);
  return BooleanFunction(n_, std::move(tt));
}

BooleanFunction VectorialFunction::coordinate(unsigned j) const {
  if (j < 1 || j > m_) throw std::invalid_argument("coordinate index out of range");
  return component(std::uint32_t(1) << (m_ - j));
}

bool VectorialFunction::is_permutation() const {
  if (n_ != m_) return false;
  std::vector<bool> seen(table_.size(), false);
  for (std::uint32_t v : table_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

unsigned differential_uniformity(const VectorialFunction& f) {
  const std::size_t dom = std::size_t(1) << f.input_bits();
  const std::size_t rng = std::size_t(1) << f.output_bits();
  unsigned best = 0;
  std::vector<unsigned> count(rng);
  for (std::uint32_t a = 1; a < dom; ++a) {
    std::fill(count.begin(), count.end(), 0u);
    for (std::uint32_t x = 0; x < dom; ++x) ++count[f(x) ^ f(x ^ a)];
    for (unsigned c : count) best = std::max(best, c);
  }
  return best;
}

unsigned nonlinearity(const VectorialFunction& f) {
  unsigned best = (std::uint32_t(1) << f.input_bits()) / 2;
  for (std::uint32_t v = 1; v < (std::uint32_t(1) << f.output_bits()); ++v)
    best = std::min(best, nonlinearity(f.component(v)));
  return best;
}

VectorialFunction rotational_construction(const BooleanFunction& f, unsigned m) {
  const unsigned n = f.arity();
  if (m > n) throw std::invalid_argument("output width cannot exceed input width");
  if (m == 0) throw std::invalid_argument("output width must be positive");
  const std::size_t dom = std::size_t(1) << n;
  // Rotating (x1,...,xn) -> (x2,...,xn,x1) rotates the index bits left.
  auto rotl_index = [n, dom](std::uint32_t x) {
    return static_cast<std::uint32_t>(((x << 1) | (x >> (n - 1))) & (dom - 1));
  };
  std::vector<std::uint32_t> table(dom);
  for (std::uint32_t x = 0; x < dom; ++x) {
    std::uint32_t out = 0, y = x;
    for (unsigned j = 0; j < m; ++j) {
      out = (out << 1) | unsigned(f.eval(y));
      y = rotl_index(y);
    }
    table[x] = out;
  }
  return VectorialFunction(n, m, std::move(table));
}

}  // namespace cryptolab::boolfun
