#include "cryptolab/gf2/bit_vector.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

#include "cryptolab/support/hex.hpp"

namespace cryptolab::gf2 {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw std::invalid_argument("bit string may contain only '0'/'1'");
  }
  return v;
}

BitVector BitVector::from_hex(std::string_view hex) {
  std::string digits;
  for (char c : hex)
    if (!std::isspace(static_cast<unsigned char>(c))) digits += c;
  BitVector v(4 * digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    int nib = support::hex_value(digits[i]);
    for (int b = 0; b < 4; ++b) v.set(4 * i + b, (nib >> (3 - b)) & 1);
  }
  return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (size_ != other.size_) throw std::invalid_argument("BitVector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (std::uint64_t x : words_) w += std::popcount(x);
  return w;
}

std::size_t BitVector::hamming_distance(const BitVector& other) const {
  if (size_ != other.size_) throw std::invalid_argument("BitVector length mismatch");
  std::size_t w = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) w += std::popcount(words_[i] ^ other.words_[i]);
  return w;
}

bool BitVector::dot(const BitVector& other) const {
  if (size_ != other.size_) throw std::invalid_argument("BitVector length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

bool BitVector::is_zero() const {
  for (std::uint64_t x : words_)
    if (x) return false;
  return true;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

std::string BitVector::to_hex() const {
  if (size_ % 4 != 0) throw std::logic_error("to_hex needs a multiple of 4 bits");
  std::string s(size_ / 4, '0');
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned nib = 0;
    for (int b = 0; b < 4; ++b) nib = (nib << 1) | unsigned(get(4 * i + b));
    s[i] = support::hex_digit(nib);
  }
  return s;
}

}  // namespace cryptolab::gf2
