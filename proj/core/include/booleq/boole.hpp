#pragma once

#include "booleq/polynomial.hpp"

namespace booleq {

// The degree-d generalization of x^2 = x: the monic polynomial
// prod_{j=0}^{d-1} (x - j), whose roots are exactly the d classical symbol
// values 0..d-1.
struct BoolePolynomial {
  unsigned dim = 0;
  Polynomial poly;
};

// Throws std::domain_error for d = 0.
BoolePolynomial boole_polynomial(unsigned d);

// k-th Lagrange idempotent on the nodes {0..d-1}:
//   l_k(x) = prod_{k' != k} (k' - x) / ((-1)^k k! (d-1-k)!)
// Degree d-1, l_k(m) = delta_{km}. Throws std::out_of_range for k >= d.
Polynomial lagrange_component(unsigned d, unsigned k);

// Remainder of p modulo boole_polynomial(d). Agrees with p on every node
// of {0..d-1} and has degree < d.
Polynomial reduce_mod_boole(const Polynomial& p, unsigned d);

}  // namespace booleq
