#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cryptolab::gf2 {

// Dense bit sequence over GF(2), packed into 64-bit words. Public contracts
// are in terms of bit positions only.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  // '0'/'1' characters, position 0 first.
  static BitVector from_string(std::string_view bits);
  // Hex, most significant nibble first: nibble i holds positions 4i..4i+3
  // with position 4i as its top bit. Whitespace is ignored. nbits must be a
  // multiple of 4 and match the digit count.
  static BitVector from_hex(std::string_view hex);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  std::size_t weight() const;
  std::size_t hamming_distance(const BitVector& other) const;
  // <x,y> over GF(2): parity of the AND of the two vectors.
  bool dot(const BitVector& other) const;
  bool is_zero() const;

  bool operator==(const BitVector&) const = default;

  std::string to_string() const;
  std::string to_hex() const;  // size must be a multiple of 4

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  static std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cryptolab::gf2
