#pragma once

#include <vector>

#include "cryptolab/gf2/bit_vector.hpp"

namespace cryptolab::hadamard {

// First-order Reed-Muller key binding. A key (k1,...,kn,k_{n+1}) of n+1 bits
// maps to the value vector of k1 x1 ^ ... ^ kn xn ^ k_{n+1}, a codeword of
// length 2^n. Any two distinct codewords are at distance exactly 2^(n-1).

// Key length n+1 with n >= 1; returns the 2^n-bit codeword.
gf2::BitVector encode(const gf2::BitVector& key);

struct DecodeResult {
  gf2::BitVector key;    // a nearest codeword's key (first in mask order)
  unsigned distance = 0; // Hamming distance achieved
  // All keys achieving the minimum. size() > 1 means the spectrum was tied
  // and decoding is ambiguous; callers must not silently pick one.
  std::vector<gf2::BitVector> ties;
  bool ambiguous() const { return ties.size() > 1; }
};

// Nearest-codeword decoding via the fast transform over +-1 values. If
// odd_parity_only is set, only keys with an odd number of ones compete.
DecodeResult decode(const gf2::BitVector& word, bool odd_parity_only = false);

// c = template ^ encode(key); the stored card leaks neither.
gf2::BitVector enroll(const gf2::BitVector& biometric_template, const gf2::BitVector& key);

struct RecoverOutcome {
  bool accepted = false;
  gf2::BitVector key;      // meaningful when accepted (or for diagnostics)
  unsigned distance = 0;   // achieved distance of the nearest codeword
  double fraction = 0.0;   // distance / 2^n
  bool ambiguous = false;
};

// Decodes probe ^ card and accepts iff distance/2^n <= max_fraction.
// Ambiguous decodes are rejected outright.
RecoverOutcome recover(const gf2::BitVector& probe, const gf2::BitVector& card,
                       double max_fraction = 0.20, bool odd_parity_only = false);

}  // namespace cryptolab::hadamard
