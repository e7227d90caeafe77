#include "cryptolab/protocol/protocol.hpp"

#include <stdexcept>

namespace cryptolab::protocol {
namespace {

Integer mod_p(const Integer& v, const Integer& p) {
  Integer r = v % p;
  if (r < 0) r += p;
  return r;
}

// base^exp mod p with exp reduced into Z_{p-1}; negative exponents go through
// the inverse.
Integer power(const Integer& base, const Integer& exp, const Integer& p) {
  Integer e = mod_p(exp, p - 1);
  return bigint::powm(mod_p(base, p), e, p);
}

Integer random_below(const Integer& bound, std::mt19937_64& rng) {
  // Rejection-free: enough random words, then reduce. Bias is irrelevant here.
  std::size_t words = mpz_sizeinbase(bound.get_mpz_t(), 2) / 64 + 2;
  Integer acc = 0;
  for (std::size_t i = 0; i < words; ++i) {
    acc <<= 64;
    acc += Integer(static_cast<unsigned long>(rng()));
  }
  return acc % bound;
}

}  // namespace

void GroupParams::validate() const {
  if (p < 3 || !bigint::probab_prime(p)) throw std::invalid_argument("modulus must be prime");
  if (g <= 1 || g >= p) throw std::invalid_argument("generator must satisfy 1 < g < p");
}

GroupParams GroupParams::random(unsigned bits, std::mt19937_64& rng) {
  if (bits < 8) throw std::invalid_argument("modulus too small");
  GroupParams out;
  Integer low = bigint::pow(2, bits - 1);
  for (;;) {
    Integer candidate = low + random_below(low, rng);
    mpz_nextprime(out.p.get_mpz_t(), candidate.get_mpz_t());
    if (mpz_sizeinbase(out.p.get_mpz_t(), 2) == bits) break;
  }
  out.g = 2 + random_below(out.p - 3, rng);
  out.validate();
  return out;
}

Party Party::create(const GroupParams& params, Integer alpha) {
  Party p;
  p.alpha = mod_p(alpha, params.p - 1);
  p.pub = power(params.g, p.alpha, params.p);
  return p;
}

Party Party::random(const GroupParams& params, std::mt19937_64& rng) {
  return create(params, random_below(params.p - 1, rng));
}

SessionTranscript establish(const GroupParams& params, const Party& a, const Party& b,
                            const Integer& r_a, const Integer& r_b) {
  const Integer& p = params.p;
  const Integer order = p - 1;
  SessionTranscript t;
  t.x_a = mod_p(a.alpha + r_a, order);
  t.x_b = mod_p(b.alpha + r_b, order);

  Integer key_a = power(power(params.g, t.x_b, p) * bigint::invert(b.pub, p), r_a, p);
  Integer key_b = power(power(params.g, t.x_a, p) * bigint::invert(a.pub, p), r_b, p);
  if (key_a != key_b) throw std::logic_error("session key mismatch between the two sides");
  Integer honest = power(params.g, mod_p(r_a, order) * mod_p(r_b, order), p);
  if (key_a != honest) throw std::logic_error("session key is not g^(Ra Rb)");
  t.key = key_a;
  return t;
}

Integer attack_extract_secret(const GroupParams& params, const Integer& pub_a,
                              const Integer& pub_b, const SessionTranscript& transcript) {
  const Integer& p = params.p;
  Integer blind = power(params.g, transcript.x_a * transcript.x_b, p);
  blind = blind * power(pub_a, -transcript.x_b, p) % p;
  blind = blind * power(pub_b, -transcript.x_a, p) % p;
  return transcript.key * bigint::invert(blind, p) % p;
}

Integer attack_predict(const GroupParams& params, const Integer& pub_a, const Integer& pub_b,
                       const Integer& s, const Integer& x_a, const Integer& x_b) {
  const Integer& p = params.p;
  Integer k = power(params.g, x_a * x_b, p);
  k = k * power(pub_a, -x_b, p) % p;
  k = k * power(pub_b, -x_a, p) % p;
  return k * s % p;
}

ScenarioRun run_scenario(const Scenario& scenario) {
  scenario.params.validate();
  Party a = Party::create(scenario.params, scenario.alpha_a);
  Party b = Party::create(scenario.params, scenario.alpha_b);

  ScenarioRun run;
  for (const auto& [r_a, r_b] : scenario.sessions)
    run.transcripts.push_back(establish(scenario.params, a, b, r_a, r_b));
  if (run.transcripts.empty()) throw std::invalid_argument("scenario needs at least one session");

  run.stolen_session = 0;
  run.extracted_secret = attack_extract_secret(scenario.params, a.pub, b.pub,
                                               run.transcripts[run.stolen_session]);
  run.all_matched = true;
  for (const auto& t : run.transcripts) {
    Integer predicted =
        attack_predict(scenario.params, a.pub, b.pub, run.extracted_secret, t.x_a, t.x_b);
    run.predictions.push_back(predicted);
    if (predicted != t.key) run.all_matched = false;
  }
  return run;
}

Scenario random_scenario(unsigned bits, std::size_t sessions, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Scenario s;
  s.params = GroupParams::random(bits, rng);
  s.alpha_a = random_below(s.params.p - 1, rng);
  s.alpha_b = random_below(s.params.p - 1, rng);
  for (std::size_t i = 0; i < sessions; ++i)
    s.sessions.emplace_back(random_below(s.params.p - 1, rng), random_below(s.params.p - 1, rng));
  return s;
}

}  // namespace cryptolab::protocol
