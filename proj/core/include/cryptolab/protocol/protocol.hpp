#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cryptolab/bigint/bigint.hpp"

namespace cryptolab::protocol {

using bigint::Integer;

// Session-key scheme over Z_p*: party keys P = g^alpha, session blinds
// X = (alpha + R) mod (p-1), key K = (g^{X_other} P_other^{-1})^{R_own}.
// Exponent arithmetic lives in Z_{p-1}, base arithmetic in Z_p.

struct GroupParams {
  Integer p;  // prime modulus
  Integer g;  // generator, 1 < g < p

  void validate() const;  // probabilistic primality + range checks
  static GroupParams random(unsigned bits, std::mt19937_64& rng);
};

struct Party {
  Integer alpha;  // private exponent in Z_{p-1}
  Integer pub;    // g^alpha mod p

  static Party create(const GroupParams& params, Integer alpha);
  static Party random(const GroupParams& params, std::mt19937_64& rng);
};

struct SessionTranscript {
  Integer x_a, x_b;  // blinded exponents, mod p-1
  Integer key;       // the agreed session key, mod p
};

// Runs one session; asserts both sides derive the same key and that it equals
// g^{R_a R_b}.
SessionTranscript establish(const GroupParams& params, const Party& a, const Party& b,
                            const Integer& r_a, const Integer& r_b);

// From one exposed session key: s = g^{alpha_a alpha_b}
//   = K / (g^{X_a X_b} P_a^{-X_b} P_b^{-X_a}).
Integer attack_extract_secret(const GroupParams& params, const Integer& pub_a,
                              const Integer& pub_b, const SessionTranscript& transcript);

// Predicts the key of a session with blinds (x_a, x_b) given the extracted s.
Integer attack_predict(const GroupParams& params, const Integer& pub_a, const Integer& pub_b,
                       const Integer& s, const Integer& x_a, const Integer& x_b);

struct Scenario {
  GroupParams params;
  Integer alpha_a, alpha_b;
  std::vector<std::pair<Integer, Integer>> sessions;  // (R_a, R_b) per session
};

struct ScenarioRun {
  std::vector<SessionTranscript> transcripts;
  std::size_t stolen_session = 0;   // transcript index the attacker reads
  Integer extracted_secret;
  std::vector<Integer> predictions;  // one per session, from s and the X values
  bool all_matched = false;
};

// Simulates every session, steals the first key, and predicts all of them.
ScenarioRun run_scenario(const Scenario& scenario);

Scenario random_scenario(unsigned bits, std::size_t sessions, std::uint64_t seed);

}  // namespace cryptolab::protocol
