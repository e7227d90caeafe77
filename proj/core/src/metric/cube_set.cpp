#include "cryptolab/metric/cube_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cryptolab::metric {
namespace {

// Distance from every point of the cube to the set, by BFS layers.
std::vector<std::uint8_t> distance_map(const CubeSet& x) {
  const unsigned n = x.dimension();
  const std::size_t size = std::size_t(1) << n;
  std::vector<std::uint8_t> dist(size, 0xff);
  std::vector<std::uint32_t> frontier = x.members();
  for (std::uint32_t m : frontier) dist[m] = 0;
  std::uint8_t level = 0;
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t v : frontier) {
      for (unsigned b = 0; b < n; ++b) {
        std::uint32_t u = v ^ (std::uint32_t(1) << b);
        if (dist[u] == 0xff) {
          dist[u] = static_cast<std::uint8_t>(level + 1);
          next.push_back(u);
        }
      }
    }
    frontier = std::move(next);
    ++level;
  }
  return dist;
}

}  // namespace

CubeSet::CubeSet(unsigned n, std::vector<std::uint32_t> members)
    : n_(n), members_(std::move(members)) {
  if (n_ == 0 || n_ > kMaxDimension)
    throw std::invalid_argument("dimension must be in 1.." + std::to_string(kMaxDimension));
  if (members_.empty()) throw std::invalid_argument("cube set must be non-empty");
  for (std::uint32_t m : members_)
    if (m >= (std::uint32_t(1) << n_)) throw std::invalid_argument("member out of range");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

CubeSet CubeSet::from_strings(const std::vector<std::string>& lines) {
  if (lines.empty()) throw std::invalid_argument("cube set must be non-empty");
  unsigned n = static_cast<unsigned>(lines[0].size());
  std::vector<std::uint32_t> members;
  for (const auto& line : lines) {
    if (line.size() != n) throw std::invalid_argument("inconsistent vector lengths");
    std::uint32_t v = 0;
    for (char c : line) {
      if (c != '0' && c != '1') throw std::invalid_argument("members must be binary strings");
      v = (v << 1) | std::uint32_t(c == '1');
    }
    members.push_back(v);
  }
  return CubeSet(n, std::move(members));
}

CubeSet CubeSet::singleton(unsigned n, std::uint32_t x) { return CubeSet(n, {x}); }

bool CubeSet::contains(std::uint32_t x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

std::uint32_t CubeSet::from_string(const std::string& bits) const {
  if (bits.size() != n_) throw std::invalid_argument("vector length mismatch");
  std::uint32_t v = 0;
  for (char c : bits) v = (v << 1) | std::uint32_t(c == '1');
  return v;
}

std::string CubeSet::member_string(std::uint32_t x) const {
  std::string s(n_, '0');
  for (unsigned i = 0; i < n_; ++i)
    if ((x >> (n_ - 1 - i)) & 1) s[i] = '1';
  return s;
}

std::vector<std::string> CubeSet::to_strings() const {
  std::vector<std::string> out;
  out.reserve(members_.size());
  for (std::uint32_t m : members_) out.push_back(member_string(m));
  return out;
}

unsigned distance_to_set(std::uint32_t y, const CubeSet& x) {
  unsigned best = x.dimension() + 1;
  for (std::uint32_t m : x.members())
    best = std::min(best, static_cast<unsigned>(std::popcount(y ^ m)));
  return best;
}

ComplementResult metric_complement(const CubeSet& x) {
  auto dist = distance_map(x);
  std::uint8_t radius = 0;
  for (std::uint8_t d : dist) radius = std::max(radius, d);
  std::vector<std::uint32_t> far;
  for (std::size_t v = 0; v < dist.size(); ++v)
    if (dist[v] == radius) far.push_back(static_cast<std::uint32_t>(v));
  return {CubeSet(x.dimension(), std::move(far)), radius};
}

bool is_metrically_regular(const CubeSet& x) {
  return metric_complement(metric_complement(x).complement).complement == x;
}

IterationTrace iterate_to_regular(const CubeSet& x) {
  IterationTrace trace;
  trace.sets.push_back(x);
  for (;;) {
    trace.sets.push_back(metric_complement(trace.sets.back()).complement);
    std::size_t k = trace.sets.size();
    if (k >= 3 && trace.sets[k - 1] == trace.sets[k - 3]) {
      trace.stabilized_at = k - 3;
      return trace;
    }
  }
}

unsigned distance_between(const CubeSet& a, const CubeSet& b) {
  unsigned best = a.dimension() + 1;
  for (std::uint32_t m : b.members()) best = std::min(best, distance_to_set(m, a));
  return best;
}

CryptosystemReport cryptosystem_check(const CubeSet& a) {
  if (!is_metrically_regular(a))
    throw std::invalid_argument("cryptosystem_check requires a metrically regular set");
  CubeSet b = metric_complement(a).complement;
  const unsigned d = distance_between(a, b);
  auto da = distance_map(a);
  auto db = distance_map(b);
  CryptosystemReport report;
  report.set_distance = d;
  for (std::size_t v = 0; v < da.size(); ++v) {
    if (static_cast<unsigned>(da[v]) + db[v] != d) {
      report.correct = false;
      report.x = static_cast<std::uint32_t>(v);
      report.d_a = da[v];
      report.d_b = db[v];
      return report;
    }
  }
  return report;
}

}  // namespace cryptolab::metric
