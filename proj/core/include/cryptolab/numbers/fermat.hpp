#pragma once

#include "cryptolab/bigint/bigint.hpp"

namespace cryptolab::numbers {

using bigint::Integer;

struct FermatNumber {
  unsigned k;
  Integer value;  // 2^(2^k) + 1
};

// k <= 20 (the value alone is ~2^20 bits beyond that).
FermatNumber fermat(unsigned k);

enum class Primality { Prime, Composite };

// 3^((F_k - 1)/2) == -1 mod F_k, valid for k >= 1; k <= 14 keeps the
// exponentiation at desk scale.
Primality pepin_test(unsigned k);

struct F5Factorization {
  Integer f5;            // 4294967297
  Integer p, q;          // 641, 6700417
  bool product_matches;  // p*q == F_5
  bool p_prime_by_trial_division;
  bool factors_are_1_mod_128;  // both factors = 1 (mod 2^7)
};

F5Factorization factor_check_f5();

}  // namespace cryptolab::numbers
