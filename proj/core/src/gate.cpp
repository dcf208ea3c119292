#include "booleq/gate.hpp"

#include <stdexcept>
#include <utility>

namespace booleq {

Gate::Gate(Matrix m) : m_(std::move(m)) {
  if (!m_.is_unitary()) {
    throw std::domain_error("gate: matrix is not unitary");
  }
}

Gate identity_gate(unsigned n) {
  return Gate(Matrix::identity(n));
}

Gate hadamard() {
  const Amplitude s = Amplitude::inv_sqrt2();
  Matrix m(2);
  m.at(0, 0) = s;
  m.at(0, 1) = s;
  m.at(1, 0) = s;
  m.at(1, 1) = -s;
  return Gate(std::move(m));
}

Gate cnot() {
  Matrix m(4);
  m.at(0, 0) = Amplitude(1);
  m.at(1, 1) = Amplitude(1);
  m.at(2, 3) = Amplitude(1);
  m.at(3, 2) = Amplitude(1);
  return Gate(std::move(m));
}

Gate gate_tensor(const Gate& l, const Gate& r) {
  return Gate(kronecker(l.matrix(), r.matrix()));
}

Gate bell_matrix() {
  return cnot() * gate_tensor(hadamard(), identity_gate(2));
}

namespace {

void require_bit(unsigned v, const char* name) {
  if (v > 1) {
    throw std::out_of_range(std::string("bell state: ") + name +
                            " must be 0 or 1");
  }
}

}  // namespace

BellState bell_state(unsigned x, unsigned y) {
  require_bit(x, "x");
  require_bit(y, "y");
  const Ket input = tensor_product(basis_ket(2, x), basis_ket(2, y));
  return {x, y, bell_matrix() * input};
}

Ket bell_closed_form(unsigned x, unsigned y) {
  require_bit(x, "x");
  require_bit(y, "y");
  const long xl = x;
  const long yl = y;
  const long components[4] = {
      1 - yl,
      yl,
      yl - 2 * xl * yl,
      (1 - 2 * xl) * (1 - yl),
  };
  Ket out(4);
  for (unsigned i = 0; i < 4; ++i) {
    // c / sqrt(2) = (c/2) * sqrt(2)
    out[i] = Amplitude(0, 0, Rational(components[i], 2), 0);
  }
  return out;
}

}  // namespace booleq
