#pragma once

#include <map>
#include <set>
#include <vector>

namespace cryptolab::numbers {

// A filling as value -> multiplicity; multiplicities sum to `cells`.
using Filling = std::map<unsigned, unsigned>;

struct AccessPuzzleResult {
  std::set<unsigned> totals;
  // Every admissible filling, keyed by its total.
  std::multimap<unsigned, Filling> fillings;
};

// Enumerates multisets of `cells` positive integers whose pairwise sums all
// lie in `sums`, with every sum value achieved by some pair. Candidate values
// are derived from the sum set (at most max(sums) - 1).
AccessPuzzleResult access_puzzle(unsigned cells = 20, const std::set<unsigned>& sums = {4, 6, 8});

}  // namespace cryptolab::numbers
