#pragma once

#include "cryptolab/boolfun/boolean_function.hpp"
#include "cryptolab/boolfun/vectorial_function.hpp"

namespace cryptolab::boolfun {

// Smallest degree of a nonzero g with f*g == 0 or (f^1)*g == 0. Found by
// testing, for each candidate degree d, whether the evaluation matrix of the
// monomials of degree <= d restricted to supp(f) (resp. supp(f^1)) has a
// nontrivial kernel. Never exceeds ceil(n/2).
unsigned algebraic_immunity(const BooleanFunction& f);

// Helper exposed for tests: does a nonzero annihilator of degree <= d exist?
bool has_nonzero_annihilator(const BooleanFunction& f, unsigned d);

// min over all 2^m - 1 nonzero component masks.
unsigned component_algebraic_immunity(const VectorialFunction& f);

}  // namespace cryptolab::boolfun
