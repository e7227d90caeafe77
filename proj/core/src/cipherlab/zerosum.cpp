#include "cryptolab/cipherlab/zerosum.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "cryptolab/gf2/bit_matrix.hpp"

namespace cryptolab::cipherlab {

ZerosumResult find_zerosum(const BlockCipher& cipher, const ZerosumConfig& config) {
  if (config.pool <= config.count)
    throw std::invalid_argument("pool must exceed the requested count");
  const std::size_t nbytes = cipher.block_bytes();
  const unsigned nbits = cipher.block_bits();
  std::mt19937_64 rng(config.seed);

  ZerosumResult result;
  for (std::size_t pool_round = 0; pool_round < config.pool_budget; ++pool_round) {
    ++result.pools_drawn;

    // Distinct random plaintexts.
    std::set<Block> seen;
    std::vector<Block> xs;
    while (xs.size() < config.pool) {
      Block b(nbytes);
      for (auto& byte : b) byte = static_cast<std::uint8_t>(rng());
      if (cipher.block_bits() < 64 && seen.size() == (std::size_t(1) << cipher.block_bits()))
        throw std::runtime_error("pool larger than the block space");
      if (seen.insert(b).second) xs.push_back(std::move(b));
    }

    // Columns Y_i = cipher(X_i) ^ X_i.
    gf2::BitMatrix m(nbits, config.pool);
    for (std::size_t i = 0; i < config.pool; ++i) {
      Block y(nbytes);
      cipher.encrypt(xs[i].data(), y.data());
      for (unsigned bit = 0; bit < nbits; ++bit) {
        bool v = (((y[bit / 8] ^ xs[i][bit / 8]) >> (bit % 8)) & 1) != 0;
        if (v) m.set(bit, i, true);
      }
    }

    auto basis = m.kernel_basis();
    if (basis.empty()) continue;

    // Random combinations of the kernel basis until the weight is right.
    for (std::size_t trial = 0; trial < config.sample_budget; ++trial) {
      ++result.kernel_samples;
      gf2::BitVector z(config.pool);
      bool any = false;
      for (const auto& b : basis)
        if (rng() & 1) {
          z ^= b;
          any = true;
        }
      if (!any || z.weight() != config.count) continue;
      for (std::size_t i = 0; i < config.pool; ++i)
        if (z.get(i)) result.blocks.push_back(xs[i]);
      if (!verify_zerosum(cipher, result.blocks))
        throw std::logic_error("kernel combination failed the xor predicate");
      return result;
    }
  }
  throw std::runtime_error("zerosum search exhausted its pool budget");
}

bool verify_zerosum(const BlockCipher& cipher, const std::vector<Block>& blocks) {
  if (blocks.empty()) return false;
  std::set<Block> distinct(blocks.begin(), blocks.end());
  if (distinct.size() != blocks.size()) return false;
  const std::size_t nbytes = cipher.block_bytes();
  Block acc(nbytes, 0);
  for (const auto& x : blocks) {
    Block y(nbytes);
    cipher.encrypt(x.data(), y.data());
    for (std::size_t i = 0; i < nbytes; ++i) acc[i] ^= static_cast<std::uint8_t>(x[i] ^ y[i]);
  }
  for (std::uint8_t b : acc)
    if (b) return false;
  return true;
}

}  // namespace cryptolab::cipherlab
