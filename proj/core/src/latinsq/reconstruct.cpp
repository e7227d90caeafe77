#include "cryptolab/latinsq/reconstruct.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace cryptolab::latinsq {
namespace {

using Perm = std::vector<std::uint8_t>;

Perm inverse(const Perm& p) {
  Perm inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

// Asks for sigma_d sigma_c sigma_b as a full permutation: queries (x,b,c,d)
// for all x != b, and fills the image at x = b by bijectivity.
Perm three_column_battery(const Oracle& oracle, unsigned n, std::uint8_t b, std::uint8_t c,
                          std::uint8_t d, ReconstructionResult& out) {
  Perm p(n, 0xff);
  std::vector<bool> used(n, false);
  for (unsigned x = 0; x < n; ++x) {
    if (x == b) continue;
    Challenge q{static_cast<std::uint8_t>(x), b, c, d};
    std::uint8_t t = oracle(q);
    ++out.queries;
    out.log.emplace_back(q, t);
    p[x] = t;
    used[t] = true;
  }
  for (unsigned v = 0; v < n; ++v)
    if (!used[v]) p[b] = static_cast<std::uint8_t>(v);
  return p;
}

// Two smallest digits not in {i, j}.
std::pair<std::uint8_t, std::uint8_t> helper_digits(unsigned n, unsigned i, unsigned j) {
  std::uint8_t out[2];
  unsigned k = 0;
  for (unsigned v = 0; v < n && k < 2; ++v)
    if (v != i && v != j) out[k++] = static_cast<std::uint8_t>(v);
  if (k != 2) throw std::invalid_argument("order too small for the battery");
  return {out[0], out[1]};
}

}  // namespace

ReconstructionResult reconstruct(const Oracle& oracle, const ReconstructOptions& options) {
  const unsigned n = options.order;
  if (n < 4) throw std::invalid_argument("attack needs order >= 4");
  ReconstructionResult result;

  // rho_j = sigma_j^{-1} sigma_0 = (sigma_d sigma_c sigma_j)^{-1} (sigma_d sigma_c sigma_0).
  std::vector<Perm> rho_inv(n);  // rho_j^{-1} = sigma_0^{-1} sigma_j
  rho_inv[0].resize(n);
  std::iota(rho_inv[0].begin(), rho_inv[0].end(), 0);
  for (unsigned j = 1; j < n; ++j) {
    auto [c, d] = helper_digits(n, 0, j);
    Perm a0 = three_column_battery(oracle, n, 0, c, d, result);
    Perm bj = three_column_battery(oracle, n, static_cast<std::uint8_t>(j), c, d, result);
    Perm bj_inv = inverse(bj);
    Perm rho(n);
    for (unsigned x = 0; x < n; ++x) rho[x] = bj_inv[a0[x]];
    rho_inv[j] = inverse(rho);
  }

  // Extra random challenges for the verification battery.
  std::mt19937_64 rng(options.seed);
  auto add_verification = [&](unsigned rounds) {
    std::uniform_int_distribution<unsigned> digit(0, n - 1);
    for (unsigned k = 0; k < rounds; ++k) {
      Challenge q;
      do {
        q.a = static_cast<std::uint8_t>(digit(rng));
        q.b = static_cast<std::uint8_t>(digit(rng));
        q.c = static_cast<std::uint8_t>(digit(rng));
        q.d = static_cast<std::uint8_t>(digit(rng));
      } while (!valid_challenge(q, n));
      std::uint8_t t = oracle(q);
      ++result.queries;
      result.log.emplace_back(q, t);
    }
  };
  add_verification(options.verify_rounds);

  // Sweep all n! candidates for sigma_0. Candidate columns are
  // sigma_j = sigma_0 rho_j^{-1}; columns are permutations by construction,
  // so Latin-ness reduces to row distinctness.
  for (unsigned attempt = 0;; ++attempt) {
    result.candidates.clear();
    Perm sigma0(n);
    std::iota(sigma0.begin(), sigma0.end(), 0);
    std::vector<std::uint8_t> cells(std::size_t(n) * n);
    do {
      bool ok = true;
      for (unsigned r = 0; r < n && ok; ++r) {
        unsigned mask = 0;
        for (unsigned j = 0; j < n; ++j) {
          std::uint8_t v = sigma0[rho_inv[j][r]];
          unsigned bit = 1u << v;
          if (mask & bit) {
            ok = false;
            break;
          }
          mask |= bit;
          cells[r * n + j] = v;
        }
      }
      if (!ok) continue;
      bool agrees = true;
      for (const auto& [q, t] : result.log) {
        std::uint8_t t1 = cells[q.a * n + q.b];
        std::uint8_t t2 = cells[t1 * n + q.c];
        if (cells[t2 * n + q.d] != t) {
          agrees = false;
          break;
        }
      }
      if (agrees) result.candidates.emplace_back(n, cells);
    } while (std::next_permutation(sigma0.begin(), sigma0.end()));

    if (result.candidates.size() <= 1 || attempt >= options.retry_rounds) return result;
    add_verification(options.verify_rounds);
  }
}

}  // namespace cryptolab::latinsq
