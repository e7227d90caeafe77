#include "cryptolab/nsucoin/rsa.hpp"

#include <stdexcept>

namespace cryptolab::nsucoin {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t rsa_sign(std::uint64_t private_exp, std::uint64_t msg) {
  if (msg >= kModulus) throw std::invalid_argument("message must be below the modulus");
  return powmod(msg, private_exp, kModulus);
}

bool rsa_verify(std::uint64_t public_exp, std::uint64_t msg, std::uint64_t sig) {
  if (msg >= kModulus || sig >= kModulus) return false;
  return powmod(sig, public_exp, kModulus) == msg;
}

std::uint64_t private_from_public(std::uint64_t public_exp) {
  using bigint::Integer;
  Integer d = bigint::invert(Integer(static_cast<unsigned long>(public_exp)),
                             Integer(static_cast<unsigned long>(kPhi)));
  return bigint::to_u64(d);
}

const std::array<UserKey, 4>& user_keys() {
  static const std::array<UserKey, 4> keys = [] {
    std::array<UserKey, 4> k{{{"Alice", 11, 0}, {"Bob", 17, 0}, {"Caroline", 199, 0}, {"Daniel", 5, 0}}};
    for (auto& u : k) u.private_exp = private_from_public(u.public_exp);
    return k;
  }();
  return keys;
}

bigint::Integer str_to_byte_dec(std::string_view s) {
  bigint::Integer v = 0;
  for (unsigned char c : s) {
    v <<= 8;
    v += static_cast<unsigned long>(c);
  }
  return v;
}

std::uint64_t str_to_byte_dec_u64(std::string_view s) {
  if (s.size() > 8) throw std::invalid_argument("string longer than 8 bytes");
  std::uint64_t v = 0;
  for (unsigned char c : s) v = (v << 8) | c;
  return v;
}

std::string dec_to_hex_str(std::uint64_t v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.insert(s.begin(), "0123456789abcdef"[v & 0xf]);
    v >>= 4;
  }
  return s;
}

std::string dec_to_hex_str(const bigint::Integer& v) {
  if (v < 0) throw std::invalid_argument("negative value");
  return v.get_str(16);
}

}  // namespace cryptolab::nsucoin
