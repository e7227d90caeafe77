#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace cryptolab::cipherlab {

// AES-256 block cipher, implemented from the standard. Built for raw block
// access in analysis code; constant-time behaviour is a non-goal.
class Aes256 {
 public:
  explicit Aes256(std::span<const std::uint8_t, 32> key);

  static Aes256 zero_key();

  void encrypt_block(const std::uint8_t in[16], std::uint8_t out[16]) const;
  void decrypt_block(const std::uint8_t in[16], std::uint8_t out[16]) const;

  std::array<std::uint8_t, 16> encrypt(const std::array<std::uint8_t, 16>& in) const;
  std::array<std::uint8_t, 16> decrypt(const std::array<std::uint8_t, 16>& in) const;

  static constexpr int kRounds = 14;

 private:
  // Round keys as 4-byte words, 4*(kRounds+1) of them.
  std::array<std::uint32_t, 4 * (kRounds + 1)> round_keys_;
};

}  // namespace cryptolab::cipherlab
