#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cryptolab::bigint {

// Arbitrary precision integers and exact rationals. mpq_class canonicalizes on
// construction, which is exactly the ExactRational contract (lowest terms,
// positive denominator).
using Integer = mpz_class;
using Rational = mpq_class;

Integer pow(const Integer& base, unsigned long exp);
Integer powm(const Integer& base, const Integer& exp, const Integer& mod);
Integer invert(const Integer& a, const Integer& mod);  // throws if not invertible
Integer gcd(const Integer& a, const Integer& b);

bool probab_prime(const Integer& n, int reps = 30);

// Fixed-point decimal rendering of q in [0, 1) range or beyond, rounded half
// up at `digits` fractional digits, e.g. decimal(p1, 6) == "0.288788".
std::string decimal(const Rational& q, std::size_t digits);

// log2 of a positive rational, accurate to ~1e-9, safe for huge numerators
// and denominators.
double log2(const Rational& q);

// "1234567" -> "1 234 567"
std::string grouped(const Integer& v, char sep = ' ');

std::uint64_t to_u64(const Integer& v);  // throws if out of range

}  // namespace cryptolab::bigint
