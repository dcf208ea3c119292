#include "booleq/ket.hpp"

#include <stdexcept>

#include "booleq/boole.hpp"

namespace booleq {

Bra bra(const Ket& k) {
  Bra b;
  b.entries.reserve(k.dim());
  for (unsigned i = 0; i < k.dim(); ++i) {
    b.entries.push_back(k[i].conj());
  }
  return b;
}

Amplitude operator*(const Bra& b, const Ket& k) {
  if (b.dim() != k.dim()) {
    throw std::invalid_argument("bra * ket: dimension mismatch");
  }
  Amplitude acc;
  for (unsigned i = 0; i < k.dim(); ++i) {
    acc += b.entries[i] * k[i];
  }
  return acc;
}

Amplitude inner_product(const Ket& l, const Ket& r) {
  if (l.dim() != r.dim()) {
    throw std::invalid_argument("inner product: dimension mismatch");
  }
  Amplitude acc;
  for (unsigned i = 0; i < l.dim(); ++i) {
    acc += l[i].conj() * r[i];
  }
  return acc;
}

Matrix outer_product(const Ket& k, const Ket& b) {
  if (k.dim() != b.dim()) {
    throw std::invalid_argument("outer product: dimension mismatch");
  }
  Matrix m(k.dim());
  for (unsigned i = 0; i < k.dim(); ++i) {
    for (unsigned j = 0; j < b.dim(); ++j) {
      m.at(i, j) = k[i] * b[j].conj();
    }
  }
  return m;
}

Ket tensor_product(const Ket& l, const Ket& r) {
  Ket out(l.dim() * r.dim());
  for (unsigned i = 0; i < l.dim(); ++i) {
    for (unsigned j = 0; j < r.dim(); ++j) {
      out[i * r.dim() + j] = l[i] * r[j];
    }
  }
  return out;
}

Ket operator*(const Matrix& m, const Ket& k) {
  if (m.dim() != k.dim()) {
    throw std::invalid_argument("matrix * ket: dimension mismatch");
  }
  Ket out(k.dim());
  for (unsigned i = 0; i < m.dim(); ++i) {
    Amplitude acc;
    for (unsigned j = 0; j < m.dim(); ++j) {
      acc += m.at(i, j) * k[j];
    }
    out[i] = acc;
  }
  return out;
}

Ket basis_ket(unsigned d, unsigned x) {
  if (x >= d) {
    throw std::out_of_range("basis ket: index x out of range");
  }
  return symbolic_ket(d).evaluate(Rational(static_cast<long>(x)));
}

Ket SymbolicKet::evaluate(const Rational& at) const {
  Ket out(dim);
  for (unsigned k = 0; k < dim; ++k) {
    out[k] = Amplitude(entries[k].eval(at));
  }
  return out;
}

SymbolicKet symbolic_ket(unsigned d) {
  if (d == 0) {
    throw std::domain_error("symbolic ket: dimension must be >= 1");
  }
  SymbolicKet out;
  out.dim = d;
  out.entries.reserve(d);
  for (unsigned k = 0; k < d; ++k) {
    out.entries.push_back(lagrange_component(d, k));
  }
  return out;
}

bool Superposition::is_normalized() const {
  Amplitude total;
  for (const auto& a : amplitudes) {
    total += a.norm_sq();
  }
  return total == Amplitude(1);
}

Superposition superpose(unsigned d, std::vector<Amplitude> amps) {
  if (amps.size() != d) {
    throw std::invalid_argument("superpose: expected exactly d amplitudes");
  }
  return {d, std::move(amps)};
}

}  // namespace booleq
