#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace booleq {

// Arbitrary-precision rational kept in canonical form: denominator > 0 and
// gcd(|numerator|, denominator) = 1. A zero denominator is rejected at
// construction; there is no NaN-like value.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}
  explicit Rational(const mpz_class& n) : q_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return mpq_sgn(q_.get_mpq_t()); }

  Rational abs() const;
  Rational inverse() const;
  double to_double() const { return q_.get_d(); }

  // Canonical literal: "n" or "n/d", denominator always positive.
  std::string str() const;

  friend Rational operator+(const Rational& l, const Rational& r) {
    return Rational(mpq_class(l.q_ + r.q_));
  }
  friend Rational operator-(const Rational& l, const Rational& r) {
    return Rational(mpq_class(l.q_ - r.q_));
  }
  friend Rational operator*(const Rational& l, const Rational& r) {
    return Rational(mpq_class(l.q_ * r.q_));
  }
  friend Rational operator/(const Rational& l, const Rational& r);
  friend Rational operator-(const Rational& x) {
    return Rational(mpq_class(-x.q_));
  }

  Rational& operator+=(const Rational& r) { return *this = *this + r; }
  Rational& operator-=(const Rational& r) { return *this = *this - r; }
  Rational& operator*=(const Rational& r) { return *this = *this * r; }
  Rational& operator/=(const Rational& r) { return *this = *this / r; }

  friend bool operator==(const Rational& l, const Rational& r) {
    return l.q_ == r.q_;
  }
  friend bool operator!=(const Rational& l, const Rational& r) {
    return !(l == r);
  }
  friend bool operator<(const Rational& l, const Rational& r) {
    return l.q_ < r.q_;
  }
  friend bool operator>(const Rational& l, const Rational& r) { return r < l; }
  friend bool operator<=(const Rational& l, const Rational& r) {
    return !(r < l);
  }
  friend bool operator>=(const Rational& l, const Rational& r) {
    return !(l < r);
  }

private:
  // GMP's mpq arithmetic preserves canonical form, so results of the
  // operators above are adopted without re-canonicalizing.
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

// Parses the literal grammar: ["-"] digits ["/" digits]. The whole input must
// be consumed. Throws std::invalid_argument on malformed text and
// std::domain_error on a zero denominator.
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace booleq
