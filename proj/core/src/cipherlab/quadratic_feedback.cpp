#include "cryptolab/cipherlab/quadratic_feedback.hpp"

#include <stdexcept>

namespace cryptolab::cipherlab {

bool QuadraticFeedback::eval(const std::vector<std::uint8_t>& window) const {
  if (window.size() != n) throw std::invalid_argument("window length must be n");
  unsigned acc = a0 ? 1 : 0;
  for (unsigned i = 0; i < n; ++i)
    if (linear[i]) acc ^= window[i];
  for (auto [i, j] : quadratic) acc ^= window[i - 1] & window[j - 1];
  return acc & 1;
}

std::vector<std::uint8_t> qf_generate(const QuadraticFeedback& f, const gf2::BitVector& init,
                                      std::size_t length) {
  if (init.size() != f.n) throw std::invalid_argument("initial state length must be n");
  if (length < f.n) throw std::invalid_argument("length must be at least n");
  std::vector<std::uint8_t> seq;
  seq.reserve(length);
  for (std::size_t i = 0; i < f.n; ++i) seq.push_back(init.get(i));
  std::vector<std::uint8_t> window(f.n);
  while (seq.size() < length) {
    std::copy(seq.end() - f.n, seq.end(), window.begin());
    seq.push_back(f.eval(window));
  }
  return seq;
}

AmbiguityWitness qf_ambiguity_witness(unsigned n) {
  if (n < 3) throw std::invalid_argument("witness needs n >= 3");
  AmbiguityWitness w;
  w.f_u.n = n;
  w.f_u.linear.assign(n, 0);
  w.f_u.quadratic = {{1, 2}};

  w.f_v.n = n;
  w.f_v.linear.assign(n, 0);
  w.f_v.linear[0] = 1;
  w.f_v.linear[n - 1] = 1;
  w.f_v.quadratic = {{2, n}};

  w.init = gf2::BitVector(n);
  for (unsigned i = 0; i + 1 < n; ++i) w.init.set(i, true);

  w.agreement_length = std::size_t(n) * n - n;

  auto u = qf_generate(w.f_u, w.init, w.agreement_length + 1);
  auto v = qf_generate(w.f_v, w.init, w.agreement_length + 1);
  for (std::size_t i = 0; i < w.agreement_length; ++i)
    if (u[i] != v[i]) throw std::logic_error("witness sequences diverged early");
  if (u[w.agreement_length] == v[w.agreement_length])
    throw std::logic_error("witness sequences failed to diverge");
  return w;
}

}  // namespace cryptolab::cipherlab
