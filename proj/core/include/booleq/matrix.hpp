#pragma once

#include <vector>

#include "booleq/amplitude.hpp"

namespace booleq {

// Dense square matrix over Amplitude, row-major.
class Matrix {
public:
  explicit Matrix(unsigned n) : n_(n), e_(static_cast<size_t>(n) * n) {}

  static Matrix identity(unsigned n);

  unsigned dim() const { return n_; }

  Amplitude& at(unsigned i, unsigned j) { return e_[idx(i, j)]; }
  const Amplitude& at(unsigned i, unsigned j) const { return e_[idx(i, j)]; }

  Matrix conj_transpose() const;
  Amplitude trace() const;

  bool is_diagonal() const;
  bool is_identity() const;
  bool is_hermitian() const;
  bool is_idempotent() const { return *this * *this == *this; }
  bool is_unitary() const { return (*this * conj_transpose()).is_identity(); }

  friend Matrix operator+(const Matrix& l, const Matrix& r);
  friend Matrix operator*(const Matrix& l, const Matrix& r);
  friend Matrix operator*(const Matrix& m, const Amplitude& s);

  friend bool operator==(const Matrix& l, const Matrix& r) {
    return l.n_ == r.n_ && l.e_ == r.e_;
  }
  friend bool operator!=(const Matrix& l, const Matrix& r) {
    return !(l == r);
  }

private:
  size_t idx(unsigned i, unsigned j) const {
    return static_cast<size_t>(i) * n_ + j;
  }

  unsigned n_;
  std::vector<Amplitude> e_;
};

// Kronecker product; the left factor indexes the high-order digit, matching
// tensor_product of kets.
Matrix kronecker(const Matrix& l, const Matrix& r);

}  // namespace booleq
