#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "booleq/rational.hpp"

namespace booleq {

// Univariate polynomial over Rational, dense coefficient list with
// coefficients()[n] holding the coefficient of x^n. Trailing zeros are
// stripped; the zero polynomial is the empty list and reports degree -1.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(const Rational& constant);
  Polynomial(long constant) : Polynomial(Rational(constant)) {}
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial x() { return monomial(1, 1); }
  static Polynomial monomial(unsigned n, const Rational& c);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  Rational coeff(unsigned n) const {
    return n < c_.size() ? c_[n] : Rational();
  }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational leading_coeff() const { return c_.empty() ? Rational() : c_.back(); }

  Rational eval(const Rational& at) const;

  struct DivMod;
  // Exact euclidean division: *this = quot * den + rem, deg rem < deg den.
  // Throws std::domain_error when den is zero.
  DivMod divmod(const Polynomial& den) const;

  // Text form: terms "c*x^n" in descending n, e.g. "1/2*x^2 - 3/2*x + 1".
  std::string str() const;

  friend Polynomial operator+(const Polynomial& l, const Polynomial& r);
  friend Polynomial operator-(const Polynomial& l, const Polynomial& r);
  friend Polynomial operator-(const Polynomial& x);
  friend Polynomial operator*(const Polynomial& l, const Polynomial& r);
  friend Polynomial operator*(const Polynomial& p, const Rational& s);
  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    return p * s;
  }

  Polynomial& operator+=(const Polynomial& r) { return *this = *this + r; }
  Polynomial& operator-=(const Polynomial& r) { return *this = *this - r; }
  Polynomial& operator*=(const Polynomial& r) { return *this = *this * r; }

  friend bool operator==(const Polynomial& l, const Polynomial& r) {
    return l.c_ == r.c_;
  }
  friend bool operator!=(const Polynomial& l, const Polynomial& r) {
    return !(l == r);
  }

private:
  void strip();

  std::vector<Rational> c_;
};

struct Polynomial::DivMod {
  Polynomial quot;
  Polynomial rem;
};

// Parses the text form above. Accepts flexible whitespace around "+"/"-"
// and unit coefficients written without "1*" (e.g. "x^2", "-x").
Polynomial parse_polynomial(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace booleq
