#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cryptolab::metric {

// Non-empty subset of the Boolean cube {0,1}^n, n <= 24 (operations sweep all
// 2^n points). Members are stored as integers; bit (n-1-i) of the integer is
// character i of the string form, so string order equals integer order.
class CubeSet {
 public:
  CubeSet(unsigned n, std::vector<std::uint32_t> members);

  static CubeSet from_strings(const std::vector<std::string>& lines);
  static CubeSet singleton(unsigned n, std::uint32_t x);

  unsigned dimension() const { return n_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(std::uint32_t x) const;

  std::uint32_t from_string(const std::string& bits) const;
  std::string member_string(std::uint32_t x) const;
  std::vector<std::string> to_strings() const;

  bool operator==(const CubeSet&) const = default;

  static constexpr unsigned kMaxDimension = 24;

 private:
  unsigned n_;
  std::vector<std::uint32_t> members_;  // sorted, unique
};

unsigned distance_to_set(std::uint32_t y, const CubeSet& x);

struct ComplementResult {
  CubeSet complement;
  unsigned covering_radius;
};

// All points at maximum distance from X, via multi-source BFS over the cube.
ComplementResult metric_complement(const CubeSet& x);

bool is_metrically_regular(const CubeSet& x);

struct IterationTrace {
  // sets[0] = X, sets[k+1] = complement(sets[k]); iteration stops once
  // sets[k+2] == sets[k], so (sets[k], sets[k+1]) is the stabilized pair.
  std::vector<CubeSet> sets;
  std::size_t stabilized_at;  // index k of the first metrically regular set
};

IterationTrace iterate_to_regular(const CubeSet& x);

// min over a in A, b in B of d(a, b).
unsigned distance_between(const CubeSet& a, const CubeSet& b);

struct CryptosystemReport {
  bool correct = true;
  // First x (in integer order) with d(x,A) + d(x,B) != d(A,B), when incorrect.
  std::uint32_t x = 0;
  unsigned d_a = 0, d_b = 0;
  unsigned set_distance = 0;
};

// Checks d(x,A) + d(x,B) == d(A,B) for every x, where B is the metric
// complement of A. Requires A metrically regular.
CryptosystemReport cryptosystem_check(const CubeSet& a);

}  // namespace cryptolab::metric
