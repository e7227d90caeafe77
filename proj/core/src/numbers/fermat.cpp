#include "cryptolab/numbers/fermat.hpp"

#include <stdexcept>

namespace cryptolab::numbers {

FermatNumber fermat(unsigned k) {
  if (k > 20) throw std::invalid_argument("fermat index limited to 20");
  Integer e = bigint::pow(2, k);
  Integer value = bigint::pow(2, e.get_ui()) + 1;
  return {k, std::move(value)};
}

Primality pepin_test(unsigned k) {
  if (k < 1) throw std::invalid_argument("test applies to k >= 1");
  if (k > 14) throw std::invalid_argument("test limited to k <= 14");
  FermatNumber f = fermat(k);
  Integer exponent = (f.value - 1) / 2;
  Integer r = bigint::powm(3, exponent, f.value);
  return r == f.value - 1 ? Primality::Prime : Primality::Composite;
}

F5Factorization factor_check_f5() {
  F5Factorization out;
  out.f5 = fermat(5).value;
  out.p = 641;
  out.q = 6700417;
  out.product_matches = (out.p * out.q == out.f5);
  out.p_prime_by_trial_division = true;
  for (Integer d = 2; d * d <= out.p; ++d)
    if (out.p % d == 0) out.p_prime_by_trial_division = false;
  out.factors_are_1_mod_128 = (out.p % 128 == 1) && (out.q % 128 == 1);
  return out;
}

}  // namespace cryptolab::numbers
