#include "booleq/polynomial.hpp"

#include <ostream>
#include <stdexcept>

namespace booleq {

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) {
    c_.push_back(constant);
  }
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  strip();
}

Polynomial Polynomial::monomial(unsigned n, const Rational& c) {
  if (c.is_zero()) {
    return Polynomial();
  }
  std::vector<Rational> v(n + 1);
  v[n] = c;
  return Polynomial(std::move(v));
}

void Polynomial::strip() {
  while (!c_.empty() && c_.back().is_zero()) {
    c_.pop_back();
  }
}

Rational Polynomial::eval(const Rational& at) const {
  Rational acc;
  for (size_t n = c_.size(); n-- > 0;) {
    acc = acc * at + c_[n];
  }
  return acc;
}

Polynomial operator+(const Polynomial& l, const Polynomial& r) {
  std::vector<Rational> v(std::max(l.c_.size(), r.c_.size()));
  for (size_t n = 0; n < v.size(); ++n) {
    if (n < l.c_.size()) v[n] += l.c_[n];
    if (n < r.c_.size()) v[n] += r.c_[n];
  }
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& l, const Polynomial& r) {
  return l + (-r);
}

Polynomial operator-(const Polynomial& x) {
  std::vector<Rational> v = x.c_;
  for (auto& c : v) {
    c = -c;
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& l, const Polynomial& r) {
  if (l.is_zero() || r.is_zero()) {
    return Polynomial();
  }
  std::vector<Rational> v(l.c_.size() + r.c_.size() - 1);
  for (size_t i = 0; i < l.c_.size(); ++i) {
    for (size_t j = 0; j < r.c_.size(); ++j) {
      v[i + j] += l.c_[i] * r.c_[j];
    }
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& p, const Rational& s) {
  std::vector<Rational> v = p.c_;
  for (auto& c : v) {
    c *= s;
  }
  return Polynomial(std::move(v));
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& den) const {
  if (den.is_zero()) {
    throw std::domain_error("polynomial: division by zero polynomial");
  }
  std::vector<Rational> rem = c_;
  std::vector<Rational> quot;
  const int dden = den.degree();
  int drem = static_cast<int>(rem.size()) - 1;
  while (!rem.empty() && rem.back().is_zero()) {
    rem.pop_back();
    --drem;
  }
  if (drem >= dden) {
    quot.assign(static_cast<size_t>(drem - dden) + 1, Rational());
  }
  const Rational lead_inv = den.leading_coeff().inverse();
  while (drem >= dden) {
    const Rational factor = rem.back() * lead_inv;
    const size_t shift = static_cast<size_t>(drem - dden);
    quot[shift] = factor;
    for (size_t i = 0; i < den.c_.size(); ++i) {
      rem[shift + i] -= factor * den.c_[i];
    }
    while (!rem.empty() && rem.back().is_zero()) {
      rem.pop_back();
    }
    drem = static_cast<int>(rem.size()) - 1;
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::str() const {
  if (c_.empty()) {
    return "0";
  }
  std::string out;
  for (size_t n = c_.size(); n-- > 0;) {
    const Rational& c = c_[n];
    if (c.is_zero()) {
      continue;
    }
    if (out.empty()) {
      if (c.sign() < 0) {
        out += '-';
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const Rational mag = c.abs();
    if (n == 0) {
      out += mag.str();
    } else {
      if (!mag.is_one()) {
        out += mag.str();
        out += '*';
      }
      out += 'x';
      if (n >= 2) {
        out += '^';
        out += std::to_string(n);
      }
    }
  }
  return out;
}

namespace {

void skip_ws(std::string_view text, size_t& pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
    ++pos;
  }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  size_t pos = 0;
  skip_ws(text, pos);
  if (pos == text.size()) {
    throw std::invalid_argument("polynomial literal: empty input");
  }
  std::vector<Rational> coeffs;
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws(text, pos);
    } else if (!first) {
      throw std::invalid_argument(
          "polynomial literal: expected '+' or '-' in \"" + std::string(text) +
          "\"");
    }
    Rational coeff(1);
    bool have_coeff = false;
    bool have_star = false;
    if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      const size_t start = pos;
      while (pos < text.size() &&
             ((text[pos] >= '0' && text[pos] <= '9') || text[pos] == '/')) {
        ++pos;
      }
      coeff = parse_rational(text.substr(start, pos - start));
      have_coeff = true;
      if (pos < text.size() && text[pos] == '*') {
        have_star = true;
        ++pos;
      }
    }
    unsigned power = 0;
    if (have_star && (pos == text.size() || text[pos] != 'x')) {
      throw std::invalid_argument(
          "polynomial literal: expected 'x' after '*' in \"" +
          std::string(text) + "\"");
    }
    if (pos < text.size() && text[pos] == 'x') {
      ++pos;
      power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        const size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
          ++pos;
        }
        if (pos == start) {
          throw std::invalid_argument(
              "polynomial literal: expected exponent digits in \"" +
              std::string(text) + "\"");
        }
        power = static_cast<unsigned>(
            std::stoul(std::string(text.substr(start, pos - start))));
      }
    } else if (!have_coeff) {
      throw std::invalid_argument("polynomial literal: expected term in \"" +
                                  std::string(text) + "\"");
    }
    if (sign < 0) {
      coeff = -coeff;
    }
    if (coeffs.size() <= power) {
      coeffs.resize(power + 1);
    }
    coeffs[power] += coeff;
    first = false;
    skip_ws(text, pos);
  }
  return Polynomial(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.str();
}

}  // namespace booleq
