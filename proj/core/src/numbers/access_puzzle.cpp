#include "cryptolab/numbers/access_puzzle.hpp"

#include <stdexcept>

namespace cryptolab::numbers {
namespace {

struct Enumerator {
  unsigned cells;
  const std::set<unsigned>& sums;
  std::vector<unsigned> values;  // candidate values, ascending
  AccessPuzzleResult result;

  void try_support(const std::vector<unsigned>& support, std::vector<unsigned>& counts,
                   std::size_t idx, unsigned remaining) {
    if (idx + 1 == support.size()) {
      counts[idx] = remaining;
      if (remaining == 0) return;
      evaluate(support, counts);
      return;
    }
    for (unsigned c = 1; c + (support.size() - idx - 1) <= remaining; ++c) {
      counts[idx] = c;
      try_support(support, counts, idx + 1, remaining - c);
    }
  }

  void evaluate(const std::vector<unsigned>& support, const std::vector<unsigned>& counts) {
    std::set<unsigned> achieved;
    for (std::size_t i = 0; i < support.size(); ++i) {
      for (std::size_t j = i; j < support.size(); ++j) {
        if (i == j && counts[i] < 2) continue;
        unsigned s = support[i] + support[j];
        if (!sums.count(s)) return;
        achieved.insert(s);
      }
    }
    if (achieved != sums) return;
    unsigned total = 0;
    Filling filling;
    for (std::size_t i = 0; i < support.size(); ++i) {
      total += support[i] * counts[i];
      filling[support[i]] = counts[i];
    }
    result.totals.insert(total);
    result.fillings.emplace(total, std::move(filling));
  }

  void pick_support(std::size_t from, std::vector<unsigned>& support) {
    if (!support.empty()) {
      // distinct support values must already be pairwise compatible
      std::vector<unsigned> counts(support.size());
      try_support(support, counts, 0, cells);
    }
    if (support.size() == values.size()) return;
    for (std::size_t i = from; i < values.size(); ++i) {
      bool compatible = true;
      for (unsigned v : support)
        if (!sums.count(v + values[i])) {
          compatible = false;
          break;
        }
      if (!compatible) continue;
      support.push_back(values[i]);
      pick_support(i + 1, support);
      support.pop_back();
    }
  }
};

}  // namespace

AccessPuzzleResult access_puzzle(unsigned cells, const std::set<unsigned>& sums) {
  if (cells < 2) throw std::invalid_argument("need at least two cells");
  if (sums.empty()) throw std::invalid_argument("need at least one admissible sum");
  unsigned max_sum = *sums.rbegin();
  Enumerator e{cells, sums, {}, {}};
  for (unsigned v = 1; v + 1 <= max_sum; ++v) e.values.push_back(v);
  std::vector<unsigned> support;
  e.pick_support(0, support);
  return std::move(e.result);
}

}  // namespace cryptolab::numbers
