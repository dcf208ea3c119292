#pragma once

#include "booleq/ket.hpp"
#include "booleq/matrix.hpp"

namespace booleq {

// Exact unitary acting on tensor-product state spaces. Construction checks
// G * G^dagger = I componentwise in Q(i, sqrt 2) and throws
// std::domain_error if it fails.
class Gate {
public:
  explicit Gate(Matrix m);

  const Matrix& matrix() const { return m_; }
  unsigned dim() const { return m_.dim(); }

  friend Ket operator*(const Gate& g, const Ket& k) { return g.m_ * k; }
  friend Gate operator*(const Gate& l, const Gate& r) {
    return Gate(l.m_ * r.m_);
  }

  friend bool operator==(const Gate& l, const Gate& r) { return l.m_ == r.m_; }
  friend bool operator!=(const Gate& l, const Gate& r) { return !(l == r); }

private:
  Matrix m_;
};

Gate identity_gate(unsigned n);

// (1/sqrt 2) [[1, 1], [1, -1]].
Gate hadamard();

// 4x4 permutation flipping the target (right, low-order) qubit when the
// control (left, high-order) qubit is 1: swaps positions 2 and 3.
Gate cnot();

// Kronecker product of gates, index order matching tensor_product of kets.
Gate gate_tensor(const Gate& l, const Gate& r);

// CNOT composed after (Hadamard on the left qubit): the 4x4 circuit that
// maps the product basis |x>|y> to the Bell basis.
Gate bell_matrix();

// Maximally entangled two-qubit state produced from the product input
// |x>|y>. Entries lie in {0, +-1/sqrt 2} and the ket has unit norm.
struct BellState {
  unsigned x = 0;
  unsigned y = 0;
  Ket ket;
};

// Circuit path: bell_matrix() applied to tensor_product of the two basis
// kets. Throws std::out_of_range unless x, y are bits.
BellState bell_state(unsigned x, unsigned y);

// Direct evaluation of the closed form
//   (1/sqrt 2) * (1-y, y, y-2xy, (1-2x)(1-y)),
// independent of the gate path. Throws std::out_of_range unless x, y are
// bits.
Ket bell_closed_form(unsigned x, unsigned y);

}  // namespace booleq
