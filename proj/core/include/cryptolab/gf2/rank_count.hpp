#pragma once

#include "cryptolab/bigint/bigint.hpp"

namespace cryptolab::gf2 {

// Number of n x n matrices over GF(2) of rank exactly k:
//   prod_{i<k} (2^n - 2^i)^2 / prod_{i<k} (2^k - 2^i).
// Exact big-integer evaluation; throws if k > n.
bigint::Integer count_matrices_of_rank(unsigned n, unsigned k);

struct SecretSharingProbabilities {
  bigint::Rational p1;  // the random n x n matrix is invertible
  bigint::Rational p2;  // its rank is small enough to sweep within the attempt budget
  unsigned max_rank;    // the rank bound implied by the budget
};

// Dimension-n sharing with two of three shares known. p1 is the chance the
// withheld share's vectors span the whole space (no information leaks); p2 is
// the chance the leftover ambiguity fits in `attempts` trial logins, i.e.
// 2^rank <= attempts.
SecretSharingProbabilities secret_sharing_probabilities(unsigned n = 32, unsigned attempts = 23);

}  // namespace cryptolab::gf2
