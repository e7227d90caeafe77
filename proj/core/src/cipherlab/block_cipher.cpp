#include "cryptolab/cipherlab/block_cipher.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace cryptolab::cipherlab {

ToyPermutation8::ToyPermutation8(std::uint64_t seed) : table_(256) {
  std::iota(table_.begin(), table_.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(table_.begin(), table_.end(), rng);
}

}  // namespace cryptolab::cipherlab
