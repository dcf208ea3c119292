#include "booleq/matrix.hpp"

#include <stdexcept>

namespace booleq {

Matrix Matrix::identity(unsigned n) {
  Matrix m(n);
  for (unsigned i = 0; i < n; ++i) {
    m.at(i, i) = Amplitude(1);
  }
  return m;
}

Matrix Matrix::conj_transpose() const {
  Matrix m(n_);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) {
      m.at(j, i) = at(i, j).conj();
    }
  }
  return m;
}

Amplitude Matrix::trace() const {
  Amplitude t;
  for (unsigned i = 0; i < n_; ++i) {
    t += at(i, i);
  }
  return t;
}

bool Matrix::is_diagonal() const {
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) {
      if (i != j && !at(i, j).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool Matrix::is_identity() const {
  const Amplitude one(1);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) {
      if (at(i, j) != (i == j ? one : Amplitude())) {
        return false;
      }
    }
  }
  return true;
}

bool Matrix::is_hermitian() const {
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = i; j < n_; ++j) {
      if (at(i, j) != at(j, i).conj()) {
        return false;
      }
    }
  }
  return true;
}

Matrix operator+(const Matrix& l, const Matrix& r) {
  if (l.n_ != r.n_) {
    throw std::invalid_argument("matrix: dimension mismatch in addition");
  }
  Matrix m(l.n_);
  for (size_t i = 0; i < l.e_.size(); ++i) {
    m.e_[i] = l.e_[i] + r.e_[i];
  }
  return m;
}

Matrix operator*(const Matrix& l, const Matrix& r) {
  if (l.n_ != r.n_) {
    throw std::invalid_argument("matrix: dimension mismatch in product");
  }
  Matrix m(l.n_);
  for (unsigned i = 0; i < l.n_; ++i) {
    for (unsigned j = 0; j < l.n_; ++j) {
      Amplitude acc;
      for (unsigned k = 0; k < l.n_; ++k) {
        acc += l.at(i, k) * r.at(k, j);
      }
      m.at(i, j) = acc;
    }
  }
  return m;
}

Matrix operator*(const Matrix& m, const Amplitude& s) {
  Matrix out(m.n_);
  for (size_t i = 0; i < m.e_.size(); ++i) {
    out.e_[i] = m.e_[i] * s;
  }
  return out;
}

Matrix kronecker(const Matrix& l, const Matrix& r) {
  const unsigned nl = l.dim();
  const unsigned nr = r.dim();
  Matrix m(nl * nr);
  for (unsigned i = 0; i < nl; ++i) {
    for (unsigned j = 0; j < nl; ++j) {
      for (unsigned p = 0; p < nr; ++p) {
        for (unsigned q = 0; q < nr; ++q) {
          m.at(i * nr + p, j * nr + q) = l.at(i, j) * r.at(p, q);
        }
      }
    }
  }
  return m;
}

}  // namespace booleq
