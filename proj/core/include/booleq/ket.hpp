#pragma once

#include <vector>

#include "booleq/amplitude.hpp"
#include "booleq/matrix.hpp"
#include "booleq/polynomial.hpp"

namespace booleq {

// Column state vector of a d-level system.
class Ket {
public:
  explicit Ket(unsigned d) : e_(d) {}
  explicit Ket(std::vector<Amplitude> entries) : e_(std::move(entries)) {}

  unsigned dim() const { return static_cast<unsigned>(e_.size()); }
  const Amplitude& operator[](unsigned i) const { return e_[i]; }
  Amplitude& operator[](unsigned i) { return e_[i]; }
  const std::vector<Amplitude>& entries() const { return e_; }

  friend bool operator==(const Ket& l, const Ket& r) { return l.e_ == r.e_; }
  friend bool operator!=(const Ket& l, const Ket& r) { return !(l == r); }

private:
  std::vector<Amplitude> e_;
};

// Conjugate-transposed row counterpart of a ket.
struct Bra {
  std::vector<Amplitude> entries;
  unsigned dim() const { return static_cast<unsigned>(entries.size()); }

  friend bool operator==(const Bra& l, const Bra& r) {
    return l.entries == r.entries;
  }
};

Bra bra(const Ket& k);

// Row-times-column product; bra entries are already conjugated.
Amplitude operator*(const Bra& b, const Ket& k);

// sum_i conj(l_i) * r_i. Throws std::invalid_argument on dimension mismatch.
Amplitude inner_product(const Ket& l, const Ket& r);

// entry(i, j) = k_i * conj(b_j). Requires equal dimensions.
Matrix outer_product(const Ket& k, const Ket& b);

// Dimension d_l * d_r; the left factor is the high-order digit:
// entry(i * d_r + j) = l_i * r_j.
Ket tensor_product(const Ket& l, const Ket& r);

Ket operator*(const Matrix& m, const Ket& k);

// Basis ket of the d-level system, produced by evaluating every Lagrange
// component at x rather than by writing the unit vector directly, so the
// defining formula itself is exercised. Throws std::out_of_range for x >= d.
Ket basis_ket(unsigned d, unsigned x);

// The d-level ket with its dependence on the symbol left in place: entry k
// is lagrange_component(d, k). Evaluating all entries at m in {0..d-1}
// yields the basis ket for m.
struct SymbolicKet {
  unsigned dim = 0;
  std::vector<Polynomial> entries;

  Ket evaluate(const Rational& at) const;
};

SymbolicKet symbolic_ket(unsigned d);

// Amplitude list over the basis; stored as given, never auto-normalized
// (exact arithmetic cannot normalize arbitrary amplitude sets inside
// Q(i, sqrt 2)). Normalization is a query.
struct Superposition {
  unsigned dim = 0;
  std::vector<Amplitude> amplitudes;

  // True iff sum |a_x|^2 equals exactly 1.
  bool is_normalized() const;
};

// Throws std::invalid_argument unless amps has length d.
Superposition superpose(unsigned d, std::vector<Amplitude> amps);

}  // namespace booleq
