#include "booleq/amplitude.hpp"

#include <array>
#include <ostream>
#include <stdexcept>

namespace booleq {

Amplitude operator*(const Amplitude& l, const Amplitude& r) {
  // Write each operand as A + B*sqrt(2) with Gaussian-rational A, B.
  // Then (A1 + B1 s)(A2 + B2 s) = (A1 A2 + 2 B1 B2) + (A1 B2 + B1 A2) s.
  const Rational &a1 = l.a_, &ai1 = l.ai_, &b1 = l.b_, &bi1 = l.bi_;
  const Rational &a2 = r.a_, &ai2 = r.ai_, &b2 = r.b_, &bi2 = r.bi_;
  const Rational two(2);
  return Amplitude(
      a1 * a2 - ai1 * ai2 + two * (b1 * b2 - bi1 * bi2),
      a1 * ai2 + ai1 * a2 + two * (b1 * bi2 + bi1 * b2),
      a1 * b2 - ai1 * bi2 + b1 * a2 - bi1 * ai2,
      a1 * bi2 + ai1 * b2 + b1 * ai2 + bi1 * a2);
}

namespace {

struct Term {
  const Rational* value;
  const char* suffix;
};

}  // namespace

std::string Amplitude::str() const {
  const std::array<Term, 4> terms{{
      {&a_, ""},
      {&ai_, "i"},
      {&b_, "s2"},
      {&bi_, "is2"},
  }};
  std::string out;
  for (const auto& t : terms) {
    if (t.value->is_zero()) {
      continue;
    }
    if (out.empty()) {
      out = t.value->str();
    } else {
      out += t.value->sign() < 0 ? '-' : '+';
      out += t.value->abs().str();
    }
    out += t.suffix;
  }
  return out.empty() ? "0" : out;
}

Amplitude parse_amplitude(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("amplitude literal: empty input");
  }
  Rational a, ai, b, bi;
  size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    if (!first) {
      if (text[pos] == '+') {
        ++pos;
      } else if (text[pos] == '-') {
        sign = -1;
        ++pos;
      } else {
        throw std::invalid_argument(
            "amplitude literal: expected '+' or '-' in \"" +
            std::string(text) + "\"");
      }
    }
    size_t start = pos;
    if (pos < text.size() && text[pos] == '-') {
      ++pos;
    }
    while (pos < text.size() &&
           ((text[pos] >= '0' && text[pos] <= '9') || text[pos] == '/')) {
      // "s2" must not swallow the rational's digits; '/' and digits only.
      ++pos;
    }
    Rational value = parse_rational(text.substr(start, pos - start));
    bool imag = false;
    bool sqrt2 = false;
    if (pos < text.size() && text[pos] == 'i') {
      imag = true;
      ++pos;
    }
    if (pos < text.size() && text.substr(pos, 2) == "s2") {
      sqrt2 = true;
      pos += 2;
    }
    if (sign < 0) {
      value = -value;
    }
    if (imag && sqrt2) {
      bi += value;
    } else if (imag) {
      ai += value;
    } else if (sqrt2) {
      b += value;
    } else {
      a += value;
    }
    first = false;
  }
  return Amplitude(a, ai, b, bi);
}

std::ostream& operator<<(std::ostream& os, const Amplitude& v) {
  return os << v.str();
}

}  // namespace booleq
