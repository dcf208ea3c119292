#include "booleq/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace booleq {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw std::domain_error("rational: zero denominator");
  }
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw std::domain_error("rational: division by zero");
  }
  return Rational(mpq_class(1 / q_));
}

Rational operator/(const Rational& l, const Rational& r) {
  if (r.is_zero()) {
    throw std::domain_error("rational: division by zero");
  }
  return Rational(mpq_class(l.q_ / r.q_));
}

std::string Rational::str() const {
  std::string s = q_.get_num().get_str();
  if (q_.get_den() != 1) {
    s += '/';
    s += q_.get_den().get_str();
  }
  return s;
}

Rational parse_rational(std::string_view text) {
  size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && text[pos] == '-') {
    neg = true;
    ++pos;
  }
  const size_t num_start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    ++pos;
  }
  if (pos == num_start) {
    throw std::invalid_argument("rational literal: expected digits in \"" +
                                std::string(text) + "\"");
  }
  mpz_class num(std::string(text.substr(num_start, pos - num_start)));
  mpz_class den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const size_t den_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      ++pos;
    }
    if (pos == den_start) {
      throw std::invalid_argument(
          "rational literal: expected digits after '/' in \"" +
          std::string(text) + "\"");
    }
    den = mpz_class(std::string(text.substr(den_start, pos - den_start)));
  }
  if (pos != text.size()) {
    throw std::invalid_argument("rational literal: trailing characters in \"" +
                                std::string(text) + "\"");
  }
  if (neg) {
    num = -num;
  }
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace booleq
