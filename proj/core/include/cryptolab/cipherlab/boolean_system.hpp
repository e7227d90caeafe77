#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cryptolab::cipherlab {

// Exhaustive solver over k <= 24 binary variables. The predicate receives the
// assignment with x1 as the most significant bit of the index; results come
// back in ascending integer order.
std::vector<std::uint32_t> brute_force_bits(unsigned k,
                                            const std::function<bool(std::uint32_t)>& predicate);

// The mixed mod-2 / integer system over x1..x16 used as the workbench's
// built-in fixture. Bit 15 of the assignment is x1.
bool equation_system16(std::uint32_t assignment);

std::vector<std::uint32_t> solve_equation_system16();

std::string assignment_to_string(std::uint32_t assignment, unsigned k);

}  // namespace cryptolab::cipherlab
