#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cryptolab/latinsq/latin_square.hpp"

namespace cryptolab::latinsq {

using Oracle = std::function<std::uint8_t(const Challenge&)>;

struct ReconstructionResult {
  // Squares consistent with every collected answer. One entry means the key
  // was uniquely recovered; more mean the verification budget was too small.
  std::vector<LatinSquare> candidates;
  std::size_t queries = 0;
  std::vector<std::pair<Challenge, std::uint8_t>> log;
};

struct ReconstructOptions {
  unsigned order = 10;
  // Random verification challenges issued after the structured batteries.
  unsigned verify_rounds = 40;
  // If several candidates survive, widen verification this many times.
  unsigned retry_rounds = 4;
  std::uint64_t seed = 1;
};

// Key-recovery attack against respond(): 18 queries per product
// sigma_j^{-1} sigma_0 expressed through two three-column batteries, then a
// sweep of all order! choices of sigma_0, keeping candidates that stay Latin
// and agree with the oracle on every logged answer.
ReconstructionResult reconstruct(const Oracle& oracle, const ReconstructOptions& options = {});

}  // namespace cryptolab::latinsq
