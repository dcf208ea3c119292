#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "booleq/rational.hpp"

namespace booleq {

// Element of Q(i, sqrt(2)):  value = (a + ai*i) + (b + bi*i)*sqrt(2).
// The four rational components are a unique representation (sqrt(2) is
// irrational over Q and i is imaginary), so equality is componentwise.
// Closed under addition, multiplication and conjugation, which is all the
// gate layer needs: every Hadamard application contributes a 1/sqrt(2)
// factor and 1/sqrt(2) = (1/2)*sqrt(2) stays inside the ring.
class Amplitude {
public:
  Amplitude() = default;
  Amplitude(Rational real) : a_(std::move(real)) {}
  Amplitude(long n) : a_(n) {}
  Amplitude(Rational a, Rational ai, Rational b, Rational bi)
      : a_(std::move(a)), ai_(std::move(ai)), b_(std::move(b)),
        bi_(std::move(bi)) {}

  static Amplitude i() { return Amplitude(0, 1, 0, 0); }
  static Amplitude sqrt2() { return Amplitude(0, 0, 1, 0); }
  static Amplitude inv_sqrt2() { return Amplitude(0, 0, Rational(1, 2), 0); }

  const Rational& a() const { return a_; }
  const Rational& ai() const { return ai_; }
  const Rational& b() const { return b_; }
  const Rational& bi() const { return bi_; }

  bool is_zero() const {
    return a_.is_zero() && ai_.is_zero() && b_.is_zero() && bi_.is_zero();
  }
  bool is_real() const { return ai_.is_zero() && bi_.is_zero(); }
  bool is_rational() const { return is_real() && b_.is_zero(); }

  Amplitude conj() const { return Amplitude(a_, -ai_, b_, -bi_); }

  // value * conj(value); always real (ai = bi = 0), possibly with a
  // sqrt(2) part.
  Amplitude norm_sq() const { return *this * conj(); }

  std::complex<double> to_complex() const {
    const double s = 1.4142135623730951;
    return {a_.to_double() + s * b_.to_double(),
            ai_.to_double() + s * bi_.to_double()};
  }

  // Canonical literal, e.g. "0", "3/5+4/5i", "-1/2s2", "1is2".
  std::string str() const;

  friend Amplitude operator+(const Amplitude& l, const Amplitude& r) {
    return Amplitude(l.a_ + r.a_, l.ai_ + r.ai_, l.b_ + r.b_, l.bi_ + r.bi_);
  }
  friend Amplitude operator-(const Amplitude& l, const Amplitude& r) {
    return Amplitude(l.a_ - r.a_, l.ai_ - r.ai_, l.b_ - r.b_, l.bi_ - r.bi_);
  }
  friend Amplitude operator-(const Amplitude& x) {
    return Amplitude(-x.a_, -x.ai_, -x.b_, -x.bi_);
  }
  friend Amplitude operator*(const Amplitude& l, const Amplitude& r);

  Amplitude& operator+=(const Amplitude& r) { return *this = *this + r; }
  Amplitude& operator-=(const Amplitude& r) { return *this = *this - r; }
  Amplitude& operator*=(const Amplitude& r) { return *this = *this * r; }

  friend bool operator==(const Amplitude& l, const Amplitude& r) {
    return l.a_ == r.a_ && l.ai_ == r.ai_ && l.b_ == r.b_ && l.bi_ == r.bi_;
  }
  friend bool operator!=(const Amplitude& l, const Amplitude& r) {
    return !(l == r);
  }

private:
  Rational a_, ai_, b_, bi_;
};

// Parses the literal grammar:
//   amplitude := term { ("+"|"-") term }
//   term      := rational ["i"] ["s2"]
// where "s2" marks a sqrt(2) factor: "1/2s2" = (1/2)*sqrt(2).
// Formatting then parsing round-trips to the identical value.
Amplitude parse_amplitude(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Amplitude& v);

}  // namespace booleq
