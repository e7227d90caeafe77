#include "cryptolab/gf2/rank_count.hpp"

#include <stdexcept>

namespace cryptolab::gf2 {

using bigint::Integer;
using bigint::Rational;

Integer count_matrices_of_rank(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("rank cannot exceed n");
  Integer num = 1, den = 1;
  Integer two_n = bigint::pow(2, n), two_k = bigint::pow(2, k);
  for (unsigned i = 0; i < k; ++i) {
    Integer t = two_n - bigint::pow(2, i);
    num *= t * t;
    den *= two_k - bigint::pow(2, i);
  }
  return num / den;  // divides exactly
}

SecretSharingProbabilities secret_sharing_probabilities(unsigned n, unsigned attempts) {
  Integer total = bigint::pow(2, n * n);

  Integer invertible = 1;
  Integer two_n = bigint::pow(2, n);
  for (unsigned i = 0; i < n; ++i) invertible *= two_n - bigint::pow(2, i);

  unsigned max_rank = 0;
  while (max_rank < n && bigint::pow(2, max_rank + 1) <= attempts) ++max_rank;

  Integer low_rank = 0;
  for (unsigned k = 0; k <= max_rank; ++k) low_rank += count_matrices_of_rank(n, k);

  SecretSharingProbabilities out;
  out.p1 = Rational(invertible, total);
  out.p1.canonicalize();
  out.p2 = Rational(low_rank, total);
  out.p2.canonicalize();
  out.max_rank = max_rank;
  return out;
}

}  // namespace cryptolab::gf2
