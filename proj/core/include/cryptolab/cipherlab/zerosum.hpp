#pragma once

#include <cstdint>
#include <vector>

#include "cryptolab/cipherlab/block_cipher.hpp"

namespace cryptolab::cipherlab {

using Block = std::vector<std::uint8_t>;

struct ZerosumResult {
  std::vector<Block> blocks;    // `count` pairwise distinct inputs X_i
  std::size_t kernel_samples;   // weight-search trials spent
  std::size_t pools_drawn;      // fresh pools needed
};

struct ZerosumConfig {
  std::size_t count = 128;
  std::size_t pool = 256;
  std::uint64_t seed = 1;
  std::size_t sample_budget = 100000;  // kernel combinations per pool
  std::size_t pool_budget = 16;        // pools before giving up
};

// Finds pairwise distinct X_1..X_count with xor X_i == xor cipher(X_i).
// Draws a pool of random plaintexts, solves M z = 0 for the matrix of
// Y_i = cipher(X_i) ^ X_i columns, and samples kernel vectors until one has
// weight exactly `count`. Throws std::runtime_error when budgets run out.
ZerosumResult find_zerosum(const BlockCipher& cipher, const ZerosumConfig& config = {});

// Independent predicate: pairwise distinct and xor X == xor cipher(X).
bool verify_zerosum(const BlockCipher& cipher, const std::vector<Block>& blocks);

}  // namespace cryptolab::cipherlab
