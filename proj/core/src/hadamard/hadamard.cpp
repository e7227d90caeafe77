#include "cryptolab/hadamard/hadamard.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace cryptolab::hadamard {
namespace {

gf2::BitVector key_from_mask(unsigned n, std::uint32_t mask, bool constant) {
  gf2::BitVector key(n + 1);
  for (unsigned i = 0; i < n; ++i) key.set(i, (mask >> (n - 1 - i)) & 1);
  key.set(n, constant);
  return key;
}

}  // namespace

gf2::BitVector encode(const gf2::BitVector& key) {
  if (key.size() < 2) throw std::invalid_argument("key must have at least 2 bits");
  const unsigned n = static_cast<unsigned>(key.size() - 1);
  std::uint32_t mask = 0;
  for (unsigned i = 0; i < n; ++i) mask = (mask << 1) | unsigned(key.get(i));
  const bool constant = key.get(n);
  gf2::BitVector word(std::size_t(1) << n);
  for (std::uint32_t x = 0; x < word.size(); ++x)
    word.set(x, ((std::popcount(mask & x) & 1) != 0) ^ constant);
  return word;
}

DecodeResult decode(const gf2::BitVector& word, bool odd_parity_only) {
  const std::size_t size = word.size();
  if (size < 2 || (size & (size - 1)) != 0)
    throw std::invalid_argument("word length must be a power of two");
  const unsigned n = static_cast<unsigned>(std::countr_zero(size));

  std::vector<std::int32_t> w(size);
  for (std::size_t i = 0; i < size; ++i) w[i] = word.get(i) ? -1 : 1;
  for (std::size_t h = 1; h < size; h <<= 1)
    for (std::size_t i = 0; i < size; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        std::int32_t a = w[j], b = w[j + h];
        w[j] = a + b;
        w[j + h] = a - b;
      }

  // Distance to the key (mask a, constant c) is (2^n - W[a])/2 for c = 0 and
  // (2^n + W[a])/2 for c = 1.
  DecodeResult out;
  unsigned best = static_cast<unsigned>(size) + 1;
  for (std::uint32_t a = 0; a < size; ++a) {
    for (unsigned c = 0; c < 2; ++c) {
      if (odd_parity_only) {
        unsigned ones = static_cast<unsigned>(std::popcount(a)) + c;
        if (ones % 2 == 0) continue;
      }
      std::int64_t signedw = c ? -static_cast<std::int64_t>(w[a]) : w[a];
      unsigned dist = static_cast<unsigned>((static_cast<std::int64_t>(size) - signedw) / 2);
      if (dist < best) {
        best = dist;
        out.ties.clear();
        out.ties.push_back(key_from_mask(n, a, c));
      } else if (dist == best) {
        out.ties.push_back(key_from_mask(n, a, c));
      }
    }
  }
  out.key = out.ties.front();
  out.distance = best;
  return out;
}

gf2::BitVector enroll(const gf2::BitVector& biometric_template, const gf2::BitVector& key) {
  gf2::BitVector code = encode(key);
  if (biometric_template.size() != code.size())
    throw std::invalid_argument("template length must be 2^n for the key's n");
  return biometric_template ^ code;
}

RecoverOutcome recover(const gf2::BitVector& probe, const gf2::BitVector& card,
                       double max_fraction, bool odd_parity_only) {
  if (probe.size() != card.size()) throw std::invalid_argument("probe/card length mismatch");
  DecodeResult dec = decode(probe ^ card, odd_parity_only);
  RecoverOutcome out;
  out.key = dec.key;
  out.distance = dec.distance;
  out.fraction = static_cast<double>(dec.distance) / static_cast<double>(probe.size());
  out.ambiguous = dec.ambiguous();
  out.accepted = !out.ambiguous && out.fraction <= max_fraction;
  return out;
}

}  // namespace cryptolab::hadamard
