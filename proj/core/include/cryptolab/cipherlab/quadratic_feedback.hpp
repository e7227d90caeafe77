#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cryptolab/gf2/bit_vector.hpp"

namespace cryptolab::cipherlab {

// Feedback function of degree <= 2 over GF(2):
//   a0 ^ xor_i a_i x_i ^ xor_{i<j} a_ij x_i x_j,
// driving u_{t+n} = f(u_t, ..., u_{t+n-1}); argument x_k is u_{t+k-1}.
struct QuadraticFeedback {
  unsigned n = 0;
  bool a0 = false;
  std::vector<std::uint8_t> linear;                       // a_1..a_n
  std::vector<std::pair<unsigned, unsigned>> quadratic;   // 1-based (i, j), i < j

  bool eval(const std::vector<std::uint8_t>& window) const;
};

// First `length` terms; the first n equal `init`.
std::vector<std::uint8_t> qf_generate(const QuadraticFeedback& f, const gf2::BitVector& init,
                                      std::size_t length);

struct AmbiguityWitness {
  QuadraticFeedback f_u;  // x1 x2
  QuadraticFeedback f_v;  // x2 xn ^ x1 ^ xn
  gf2::BitVector init;    // 1^(n-1) 0
  std::size_t agreement_length;  // n^2 - n
};

// Two distinct degree-2 feedbacks whose sequences from the same seed agree on
// exactly n^2 - n leading terms; the divergence is re-verified by simulation.
AmbiguityWitness qf_ambiguity_witness(unsigned n);

}  // namespace cryptolab::cipherlab
