#include "booleq/boole.hpp"

#include <stdexcept>

namespace booleq {

BoolePolynomial boole_polynomial(unsigned d) {
  if (d == 0) {
    throw std::domain_error("boole polynomial: dimension must be >= 1");
  }
  Polynomial p(1);
  for (unsigned j = 0; j < d; ++j) {
    // factor (x - j)
    p *= Polynomial(std::vector<Rational>{Rational(-static_cast<long>(j)),
                                          Rational(1)});
  }
  return {d, p};
}

Polynomial lagrange_component(unsigned d, unsigned k) {
  if (d == 0) {
    throw std::domain_error("lagrange component: dimension must be >= 1");
  }
  if (k >= d) {
    throw std::out_of_range("lagrange component: index k out of range");
  }
  Polynomial p(1);
  for (unsigned j = 0; j < d; ++j) {
    if (j == k) {
      continue;
    }
    // factor (j - x)
    p *= Polynomial(std::vector<Rational>{Rational(static_cast<long>(j)),
                                          Rational(-1)});
  }
  mpz_class kf, rf;
  mpz_fac_ui(kf.get_mpz_t(), k);
  mpz_fac_ui(rf.get_mpz_t(), d - 1 - k);
  mpz_class denom = kf * rf;
  if (k % 2 == 1) {
    denom = -denom;
  }
  return p * Rational(mpz_class(1), denom);
}

Polynomial reduce_mod_boole(const Polynomial& p, unsigned d) {
  return p.divmod(boole_polynomial(d).poly).rem;
}

}  // namespace booleq
