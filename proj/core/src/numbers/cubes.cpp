#include "cryptolab/numbers/cubes.hpp"

#include <stdexcept>

namespace cryptolab::numbers {

CubeKey seven_cubes(unsigned long e) {
  if (e < 1 || e % 3 != 1)
    throw std::invalid_argument(
        "exponent must be 1 mod 3: 2016^e = 2016 * (2016^((e-1)/3))^3 needs (e-1)/3 integral");
  CubeKey key;
  bigint::Integer scale = bigint::pow(2016, (e - 1) / 3);
  for (unsigned i = 0; i < 7; ++i) key.parts[i] = bigint::Integer(3 + i) * scale;
  key.target = bigint::pow(2016, e);
  bigint::Integer sum = 0;
  for (const auto& part : key.parts) sum += part * part * part;
  if (sum != key.target) throw std::logic_error("cube sum identity failed");
  return key;
}

}  // namespace cryptolab::numbers
