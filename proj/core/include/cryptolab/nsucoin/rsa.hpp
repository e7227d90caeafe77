#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "cryptolab/bigint/bigint.hpp"

namespace cryptolab::nsucoin {

// Raw textbook RSA with the coin's fixed 64-bit modulus. No padding by
// design: signatures are bare modular powers of reduced hashes.
inline constexpr std::uint64_t kModulus = 9101050456842973679ull;
inline constexpr std::uint64_t kFactorP = 2250339337ull;
inline constexpr std::uint64_t kFactorQ = 4044301367ull;
inline constexpr std::uint64_t kPhi = 9101050450548332976ull;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// msg^d mod n; rejects msg >= n.
std::uint64_t rsa_sign(std::uint64_t private_exp, std::uint64_t msg);
bool rsa_verify(std::uint64_t public_exp, std::uint64_t msg, std::uint64_t sig);

// d = e^(-1) mod phi(n).
std::uint64_t private_from_public(std::uint64_t public_exp);

struct UserKey {
  std::string name;
  std::uint64_t public_exp;
  std::uint64_t private_exp;
};

// The four account holders with their fixed public exponents.
const std::array<UserKey, 4>& user_keys();

// UTF-8 bytes of the string as a big-endian integer.
bigint::Integer str_to_byte_dec(std::string_view s);
// Fast path for strings of at most 8 bytes.
std::uint64_t str_to_byte_dec_u64(std::string_view s);

// Lowercase hex without leading zeros ("0" for zero).
std::string dec_to_hex_str(std::uint64_t v);
std::string dec_to_hex_str(const bigint::Integer& v);

}  // namespace cryptolab::nsucoin
