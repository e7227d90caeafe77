#include "cryptolab/cipherlab/boolean_system.hpp"

#include <stdexcept>
#include <string>

namespace cryptolab::cipherlab {

std::vector<std::uint32_t> brute_force_bits(unsigned k,
                                            const std::function<bool(std::uint32_t)>& predicate) {
  if (k > 24) throw std::invalid_argument("exhaustive solver is limited to 24 variables");
  std::vector<std::uint32_t> solutions;
  const std::uint32_t limit = std::uint32_t(1) << k;
  for (std::uint32_t a = 0; a < limit; ++a)
    if (predicate(a)) solutions.push_back(a);
  return solutions;
}

bool equation_system16(std::uint32_t a) {
  // x[i] for i in 1..16; x1 is the assignment's most significant bit.
  int x[17];
  for (int i = 1; i <= 16; ++i) x[i] = (a >> (16 - i)) & 1;

  // Mixed semantics exactly as the system is written: ^ is mod-2 on bits,
  // +/-/* and squares are over the integers.
  auto sq = [](int v) { return v * v; };
  if (((x[1] & x[3]) ^ (x[2] & x[4])) != x[5] - x[6]) return false;
  if ((x[14] ^ x[11]) != (x[12] ^ x[13] ^ x[14] ^ x[15] ^ x[16])) return false;
  if (sq(x[8] + x[9] + x[7]) != 2 * (x[6] + x[11] + x[10])) return false;
  if (((x[13] & x[11]) ^ (x[12] & x[14])) != -(x[16] - x[15])) return false;
  if ((x[5] & x[1] & x[6]) != (x[4] & x[2] & x[3])) return false;
  if ((x[11] ^ x[8] ^ x[7]) != (x[10] ^ x[6])) return false;
  if (((x[6] & x[11] & x[10]) ^ (x[7] & x[9] & x[8])) != 0) return false;
  // ((x12+x14+x13)/sqrt(2))^2 - x15 = x16 + x11, cleared of the denominator.
  if (sq(x[12] + x[14] + x[13]) - 2 * x[15] != 2 * (x[16] + x[11])) return false;
  if ((x[1] ^ x[6]) != (x[5] ^ x[3] ^ x[2])) return false;
  if (((x[6] & x[8]) ^ (x[9] & x[7])) != x[10] - x[11]) return false;
  if (2 * (x[5] + x[1] + x[6]) != sq(x[4] + x[3] + x[2])) return false;
  if ((x[11] & x[13] & x[12]) != (x[15] & x[14] & x[16])) return false;
  return true;
}

std::vector<std::uint32_t> solve_equation_system16() {
  return brute_force_bits(16, equation_system16);
}

std::string assignment_to_string(std::uint32_t assignment, unsigned k) {
  std::string s(k, '0');
  for (unsigned i = 0; i < k; ++i)
    if ((assignment >> (k - 1 - i)) & 1) s[i] = '1';
  return s;
}

}  // namespace cryptolab::cipherlab
