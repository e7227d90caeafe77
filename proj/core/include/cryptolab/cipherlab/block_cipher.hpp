#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cryptolab/cipherlab/aes256.hpp"

namespace cryptolab::cipherlab {

// Bijection on fixed-width blocks. Implementations are immutable after
// construction and callable concurrently.
class BlockCipher {
 public:
  virtual ~BlockCipher() = default;
  virtual unsigned block_bits() const = 0;
  std::size_t block_bytes() const { return block_bits() / 8; }
  virtual void encrypt(const std::uint8_t* in, std::uint8_t* out) const = 0;
};

// AES-256 under the all-zero 32-byte key.
class Aes256ZeroKey final : public BlockCipher {
 public:
  Aes256ZeroKey() : aes_(Aes256::zero_key()) {}
  unsigned block_bits() const override { return 128; }
  void encrypt(const std::uint8_t* in, std::uint8_t* out) const override {
    aes_.encrypt_block(in, out);
  }

 private:
  Aes256 aes_;
};

// Random 8-bit substitution, for small-instance oracles.
class ToyPermutation8 final : public BlockCipher {
 public:
  explicit ToyPermutation8(std::uint64_t seed);
  unsigned block_bits() const override { return 8; }
  void encrypt(const std::uint8_t* in, std::uint8_t* out) const override { *out = table_[*in]; }

 private:
  std::vector<std::uint8_t> table_;
};

}  // namespace cryptolab::cipherlab
