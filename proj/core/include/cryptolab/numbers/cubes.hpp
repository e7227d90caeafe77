#pragma once

#include <array>

#include "cryptolab/bigint/bigint.hpp"

namespace cryptolab::numbers {

struct CubeKey {
  std::array<bigint::Integer, 7> parts;
  bigint::Integer target;  // 2016^e, equal to the sum of the seven cubes
};

// Seven positive cubes summing to 2016^e. Uses 3^3+...+9^3 = 2016 scaled by
// 2016^((e-1)/3); requires e = 1 (mod 3). The cube-sum identity is verified
// exactly before returning.
CubeKey seven_cubes(unsigned long e);

}  // namespace cryptolab::numbers
