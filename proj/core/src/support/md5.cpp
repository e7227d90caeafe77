#include "cryptolab/support/md5.hpp"

#include <cstring>

namespace cryptolab::md5 {
namespace {

constexpr std::uint32_t kInit[4] = {0x67452301u, 0xefcdab89u, 0x98badcfeu, 0x10325476u};

constexpr std::uint32_t K[64] = {
    0xd76aa478u, 0xe8c7b756u, 0x242070dbu, 0xc1bdceeeu, 0xf57c0fafu, 0x4787c62au,
    0xa8304613u, 0xfd469501u, 0x698098d8u, 0x8b44f7afu, 0xffff5bb1u, 0x895cd7beu,
    0x6b901122u, 0xfd987193u, 0xa679438eu, 0x49b40821u, 0xf61e2562u, 0xc040b340u,
    0x265e5a51u, 0xe9b6c7aau, 0xd62f105du, 0x02441453u, 0xd8a1e681u, 0xe7d3fbc8u,
    0x21e1cde6u, 0xc33707d6u, 0xf4d50d87u, 0x455a14edu, 0xa9e3e905u, 0xfcefa3f8u,
    0x676f02d9u, 0x8d2a4c8au, 0xfffa3942u, 0x8771f681u, 0x6d9d6122u, 0xfde5380cu,
    0xa4beea44u, 0x4bdecfa9u, 0xf6bb4b60u, 0xbebfbc70u, 0x289b7ec6u, 0xeaa127fau,
    0xd4ef3085u, 0x04881d05u, 0xd9d4d039u, 0xe6db99e5u, 0x1fa27cf8u, 0xc4ac5665u,
    0xf4292244u, 0x432aff97u, 0xab9423a7u, 0xfc93a039u, 0x655b59c3u, 0x8f0ccc92u,
    0xffeff47du, 0x85845dd1u, 0x6fa87e4fu, 0xfe2ce6e0u, 0xa3014314u, 0x4e0811a1u,
    0xf7537e82u, 0xbd3af235u, 0x2ad7d2bbu, 0xeb86d391u};

constexpr int S[64] = {7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22,
                       5, 9,  14, 20, 5, 9,  14, 20, 5, 9,  14, 20, 5, 9,  14, 20,
                       4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23,
                       6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21};

constexpr int G[64] = {0, 1, 2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14, 15,
                       1, 6, 11, 0,  5,  10, 15, 4,  9,  14, 3,  8,  13, 2,  7,  12,
                       5, 8, 11, 14, 1,  4,  7,  10, 13, 0,  3,  6,  9,  12, 15, 2,
                       0, 7, 14, 5,  12, 3,  10, 1,  8,  15, 6,  13, 4,  11, 2,  9};

inline std::uint32_t rotl(std::uint32_t x, int s) { return (x << s) | (x >> (32 - s)); }

void compress(std::uint32_t state[4], const std::uint8_t block[64]) {
  std::uint32_t m[16];
  std::memcpy(m, block, 64);
  std::uint32_t a = state[0], b = state[1], c = state[2], d = state[3];
  for (int i = 0; i < 64; ++i) {
    std::uint32_t f;
    if (i < 16)
      f = (b & c) | (~b & d);
    else if (i < 32)
      f = (d & b) | (~d & c);
    else if (i < 48)
      f = b ^ c ^ d;
    else
      f = c ^ (b | ~d);
    std::uint32_t tmp = d;
    d = c;
    c = b;
    b = b + rotl(a + f + K[i] + m[G[i]], S[i]);
    a = tmp;
  }
  state[0] += a;
  state[1] += b;
  state[2] += c;
  state[3] += d;
}

}  // namespace

std::array<std::uint8_t, 16> digest(std::string_view data) {
  std::uint32_t state[4] = {kInit[0], kInit[1], kInit[2], kInit[3]};
  const auto* p = reinterpret_cast<const std::uint8_t*>(data.data());
  std::size_t n = data.size();
  while (n >= 64) {
    compress(state, p);
    p += 64;
    n -= 64;
  }
  std::uint8_t block[64] = {};
  std::memcpy(block, p, n);
  block[n] = 0x80;
  std::uint64_t bitlen = static_cast<std::uint64_t>(data.size()) * 8;
  if (n >= 56) {
    compress(state, block);
    std::memset(block, 0, 64);
  }
  std::memcpy(block + 56, &bitlen, 8);
  compress(state, block);
  std::array<std::uint8_t, 16> out;
  std::memcpy(out.data(), state, 16);
  return out;
}

std::string hex_digest(std::string_view data) {
  static const char* lut = "0123456789abcdef";
  auto d = digest(data);
  std::string s(32, '0');
  for (int i = 0; i < 16; ++i) {
    s[2 * i] = lut[d[i] >> 4];
    s[2 * i + 1] = lut[d[i] & 0xf];
  }
  return s;
}

std::string reduced_hex(std::string_view data) { return hex_digest(data).substr(0, 8); }

void pad_block(const std::uint8_t* msg, std::size_t len, std::uint8_t block[64]) {
  std::memset(block, 0, 64);
  std::memcpy(block, msg, len);
  block[len] = 0x80;
  std::uint64_t bitlen = static_cast<std::uint64_t>(len) * 8;
  std::memcpy(block + 56, &bitlen, 8);
}

std::uint32_t first_word_short(const std::uint8_t* msg, std::size_t len) {
  std::uint8_t block[64];
  pad_block(msg, len, block);
  std::uint32_t state[4] = {kInit[0], kInit[1], kInit[2], kInit[3]};
  compress(state, block);
  return state[0];
}

template <std::size_t L>
void first_word_lanes(const std::uint8_t blocks[][64], std::uint32_t out[L]) {
  std::uint32_t m[16][L];
  for (std::size_t l = 0; l < L; ++l) {
    for (int w = 0; w < 16; ++w) {
      std::uint32_t v;
      std::memcpy(&v, blocks[l] + 4 * w, 4);
      m[w][l] = v;
    }
  }
  std::uint32_t a[L], b[L], c[L], d[L];
  for (std::size_t l = 0; l < L; ++l) {
    a[l] = kInit[0];
    b[l] = kInit[1];
    c[l] = kInit[2];
    d[l] = kInit[3];
  }
  for (int i = 0; i < 64; ++i) {
    const std::uint32_t k = K[i];
    const int s = S[i];
    const std::uint32_t* mw = m[G[i]];
    if (i < 16) {
      for (std::size_t l = 0; l < L; ++l) {
        std::uint32_t f = (b[l] & c[l]) | (~b[l] & d[l]);
        std::uint32_t t = d[l];
        d[l] = c[l];
        c[l] = b[l];
        std::uint32_t x = a[l] + f + k + mw[l];
        b[l] = b[l] + rotl(x, s);
        a[l] = t;
      }
    } else if (i < 32) {
      for (std::size_t l = 0; l < L; ++l) {
        std::uint32_t f = (d[l] & b[l]) | (~d[l] & c[l]);
        std::uint32_t t = d[l];
        d[l] = c[l];
        c[l] = b[l];
        std::uint32_t x = a[l] + f + k + mw[l];
        b[l] = b[l] + rotl(x, s);
        a[l] = t;
      }
    } else if (i < 48) {
      for (std::size_t l = 0; l < L; ++l) {
        std::uint32_t f = b[l] ^ c[l] ^ d[l];
        std::uint32_t t = d[l];
        d[l] = c[l];
        c[l] = b[l];
        std::uint32_t x = a[l] + f + k + mw[l];
        b[l] = b[l] + rotl(x, s);
        a[l] = t;
      }
    } else {
      for (std::size_t l = 0; l < L; ++l) {
        std::uint32_t f = c[l] ^ (b[l] | ~d[l]);
        std::uint32_t t = d[l];
        d[l] = c[l];
        c[l] = b[l];
        std::uint32_t x = a[l] + f + k + mw[l];
        b[l] = b[l] + rotl(x, s);
        a[l] = t;
      }
    }
  }
  for (std::size_t l = 0; l < L; ++l) out[l] = a[l] + kInit[0];
}

template void first_word_lanes<4>(const std::uint8_t blocks[][64], std::uint32_t out[4]);
template void first_word_lanes<8>(const std::uint8_t blocks[][64], std::uint32_t out[8]);
template void first_word_lanes<16>(const std::uint8_t blocks[][64], std::uint32_t out[16]);

}  // namespace cryptolab::md5
