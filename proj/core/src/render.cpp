#include "booleq/render.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace booleq::render {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += parts[i];
  }
  return out;
}

std::string pmatrix(const std::vector<std::string>& rows) {
  return "\\begin{pmatrix}" + join(rows, "\\\\") + "\\end{pmatrix}";
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  // "-0" reads as noise in annotations
  if (std::string(buf) == "-0") {
    return "0";
  }
  return buf;
}

}  // namespace

std::string ket_text(const Ket& k) {
  std::vector<std::string> parts;
  parts.reserve(k.dim());
  for (unsigned i = 0; i < k.dim(); ++i) {
    parts.push_back(k[i].str());
  }
  return "(" + join(parts, ", ") + ")";
}

std::string ket_latex(const Ket& k) {
  std::vector<std::string> rows;
  rows.reserve(k.dim());
  for (unsigned i = 0; i < k.dim(); ++i) {
    rows.push_back(amplitude_latex(k[i]));
  }
  return pmatrix(rows);
}

std::string symbolic_ket_text(const SymbolicKet& k) {
  std::vector<std::string> parts;
  parts.reserve(k.dim);
  for (const auto& p : k.entries) {
    parts.push_back(p.str());
  }
  return "(" + join(parts, ", ") + ")";
}

std::string symbolic_ket_latex(const SymbolicKet& k) {
  std::vector<std::string> rows;
  rows.reserve(k.dim);
  for (unsigned i = 0; i < k.dim; ++i) {
    rows.push_back(lagrange_factored(k.dim, i));
  }
  return lagrange_prefactor_latex(k.dim) + pmatrix(rows);
}

std::string matrix_text(const Matrix& m) {
  if (m.is_diagonal()) {
    std::vector<std::string> parts;
    parts.reserve(m.dim());
    for (unsigned i = 0; i < m.dim(); ++i) {
      parts.push_back(m.at(i, i).str());
    }
    return "diag(" + join(parts, ", ") + ")";
  }
  std::vector<std::string> lines;
  lines.reserve(m.dim());
  for (unsigned i = 0; i < m.dim(); ++i) {
    std::vector<std::string> row;
    row.reserve(m.dim());
    for (unsigned j = 0; j < m.dim(); ++j) {
      row.push_back(m.at(i, j).str());
    }
    lines.push_back("(" + join(row, ", ") + ")");
  }
  return join(lines, "\n");
}

std::string matrix_latex(const Matrix& m) {
  std::vector<std::string> rows;
  rows.reserve(m.dim());
  for (unsigned i = 0; i < m.dim(); ++i) {
    std::vector<std::string> row;
    row.reserve(m.dim());
    for (unsigned j = 0; j < m.dim(); ++j) {
      row.push_back(amplitude_latex(m.at(i, j)));
    }
    rows.push_back(join(row, "&"));
  }
  return pmatrix(rows);
}

std::string symbolic_projector_text(const SymbolicProjector& p) {
  std::vector<std::string> parts;
  parts.reserve(p.dim);
  for (const auto& q : p.diagonal) {
    parts.push_back(q.str());
  }
  return "diag(" + join(parts, ", ") + ")";
}

std::string symbolic_projector_latex(const SymbolicProjector& p) {
  std::vector<std::string> rows;
  rows.reserve(p.dim);
  for (unsigned i = 0; i < p.dim; ++i) {
    std::vector<std::string> row(p.dim, "0");
    row[i] = lagrange_factored(p.dim, i);
    rows.push_back(join(row, "&"));
  }
  return lagrange_prefactor_latex(p.dim) + pmatrix(rows);
}

std::string lagrange_factored(unsigned d, unsigned k) {
  mpz_class mult;
  mpz_bin_uiui(mult.get_mpz_t(), d - 1, k);
  std::vector<std::string> factors;
  bool first_bare = false;
  for (unsigned j = 0; j < d; ++j) {
    if (j == k) {
      continue;
    }
    if (j < k) {
      if (j == 0) {
        factors.push_back("x");
        first_bare = true;
      } else {
        factors.push_back("(x-" + std::to_string(j) + ")");
      }
    } else {
      factors.push_back("(" + std::to_string(j) + "-x)");
    }
  }
  if (factors.empty()) {
    return "1";
  }
  if (mult == 1 && factors.size() == 1 && !first_bare) {
    // single parenthesized factor: drop the parentheses
    std::string f = factors[0];
    return f.substr(1, f.size() - 2);
  }
  std::string out;
  if (mult != 1) {
    out += mult.get_str();
  }
  for (const auto& f : factors) {
    out += f;
  }
  return out;
}

std::string lagrange_prefactor_latex(unsigned d) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), d - 1);
  if (f == 1) {
    return "";
  }
  return "\\frac{1}{" + f.get_str() + "}";
}

std::string rational_latex(const Rational& r) {
  if (r.is_integer()) {
    return r.numerator().get_str();
  }
  std::string sign = r.sign() < 0 ? "-" : "";
  const Rational mag = r.abs();
  return sign + "\\frac{" + mag.numerator().get_str() + "}{" +
         mag.denominator().get_str() + "}";
}

std::string amplitude_latex(const Amplitude& v) {
  struct Part {
    Rational value;
    const char* suffix;
  };
  const Part parts[4] = {
      {v.a(), ""},
      {v.ai(), "i"},
      {v.b(), "\\sqrt{2}"},
      {v.bi(), "i\\sqrt{2}"},
  };
  std::string out;
  for (const auto& p : parts) {
    if (p.value.is_zero()) {
      continue;
    }
    std::string body;
    const Rational mag = p.value.abs();
    if (mag.is_one() && p.suffix[0] != '\0') {
      body = p.suffix;
    } else {
      body = rational_latex(mag) + p.suffix;
    }
    if (out.empty()) {
      out = (p.value.sign() < 0 ? "-" : "") + body;
    } else {
      out += (p.value.sign() < 0 ? "-" : "+") + body;
    }
  }
  return out.empty() ? "0" : out;
}

std::string polynomial_latex(const Polynomial& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  for (int n = p.degree(); n >= 0; --n) {
    const Rational c = p.coeff(static_cast<unsigned>(n));
    if (c.is_zero()) {
      continue;
    }
    if (out.empty()) {
      if (c.sign() < 0) {
        out += '-';
      }
    } else {
      out += c.sign() < 0 ? '-' : '+';
    }
    const Rational mag = c.abs();
    std::string xpart;
    if (n >= 1) {
      xpart = "x";
      if (n >= 2) {
        xpart += "^{" + std::to_string(n) + "}";
      }
    }
    if (n == 0 || !mag.is_one()) {
      out += rational_latex(mag);
    }
    out += xpart;
  }
  return out;
}

std::string bell_latex(const BellState& b) {
  std::vector<std::string> rows;
  rows.reserve(4);
  for (unsigned i = 0; i < 4; ++i) {
    // entries are multiples of 1/sqrt(2); show the integer 2*b
    const Rational twice = b.ket[i].b() * Rational(2);
    rows.push_back(twice.numerator().get_str());
  }
  return "|B_{" + std::to_string(b.x) + std::to_string(b.y) +
         "}\\rangle = \\frac{1}{\\sqrt{2}}" + pmatrix(rows);
}

std::string approx_amplitude(const Amplitude& v) {
  const std::complex<double> z = v.to_complex();
  if (z.imag() == 0.0) {
    return format_double(z.real());
  }
  std::string out = format_double(z.real());
  if (z.imag() >= 0.0) {
    out += "+";
  }
  out += format_double(z.imag());
  out += "i";
  return out;
}

std::string approx_ket(const Ket& k) {
  std::vector<std::string> parts;
  parts.reserve(k.dim());
  for (unsigned i = 0; i < k.dim(); ++i) {
    parts.push_back(approx_amplitude(k[i]));
  }
  return "(" + join(parts, ", ") + ")";
}

}  // namespace booleq::render
