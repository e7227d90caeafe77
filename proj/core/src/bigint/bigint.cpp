#include "cryptolab/bigint/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace cryptolab::bigint {

Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer powm(const Integer& base, const Integer& exp, const Integer& mod) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

Integer invert(const Integer& a, const Integer& mod) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw std::domain_error("not invertible modulo " + mod.get_str());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool probab_prime(const Integer& n, int reps) {
  return mpz_probab_prime_p(n.get_mpz_t(), reps) != 0;
}

std::string decimal(const Rational& q, std::size_t digits) {
  if (q < 0) return "-" + decimal(Rational(-q), digits);
  Integer scale = pow(Integer(10), static_cast<unsigned long>(digits));
  // round(q * 10^digits) = floor((2*num*scale + den) / (2*den))
  Integer num = q.get_num() * scale;
  Integer den = q.get_den();
  Integer scaled = (2 * num + den) / (2 * den);
  Integer ip = scaled / scale;
  Integer fp = scaled % scale;
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  return ip.get_str() + (digits ? "." + frac : "");
}

double log2(const Rational& q) {
  if (q <= 0) throw std::domain_error("log2 of non-positive rational");
  signed long en, ed;
  double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
  return (std::log2(mn) + static_cast<double>(en)) - (std::log2(md) + static_cast<double>(ed));
}

std::string grouped(const Integer& v, char sep) {
  std::string s = v.get_str();
  std::size_t start = (s[0] == '-') ? 1 : 0;
  std::string out = s.substr(0, start);
  std::size_t n = s.size() - start;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && (n - i) % 3 == 0) out += sep;
    out += s[start + i];
  }
  return out;
}

std::uint64_t to_u64(const Integer& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
    throw std::out_of_range("value does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

}  // namespace cryptolab::bigint
