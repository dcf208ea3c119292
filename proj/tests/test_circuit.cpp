#include <stdexcept>

#include "doctest.h"

#include "booleq/gate.hpp"
#include "booleq/ket.hpp"

using booleq::Amplitude;
using booleq::Gate;
using booleq::Ket;
using booleq::Matrix;
using booleq::Rational;

namespace {

const Amplitude kInvSqrt2 = Amplitude::inv_sqrt2();

// The expected composite entries, written out independently of the
// gate-layer construction.
Matrix expected_bell_matrix() {
  const long rows[4][4] = {
      {1, 0, 1, 0},
      {0, 1, 0, 1},
      {0, 1, 0, -1},
      {1, 0, -1, 0},
  };
  Matrix m(4);
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      m.at(i, j) = Amplitude(0, 0, Rational(rows[i][j], 2), 0);
    }
  }
  return m;
}

Ket scaled_bell(long e0, long e1, long e2, long e3) {
  Ket k(4);
  const long entries[4] = {e0, e1, e2, e3};
  for (unsigned i = 0; i < 4; ++i) {
    k[i] = Amplitude(0, 0, Rational(entries[i], 2), 0);
  }
  return k;
}

}  // namespace

TEST_CASE("hadamard entries and action") {
  const Gate h = booleq::hadamard();
  CHECK(h.matrix().at(0, 0) == kInvSqrt2);
  CHECK(h.matrix().at(1, 1) == -kInvSqrt2);

  const Ket plus = h * booleq::basis_ket(2, 0);
  CHECK(plus[0] == kInvSqrt2);
  CHECK(plus[1] == kInvSqrt2);

  CHECK((h * h).matrix() == Matrix::identity(2));
  CHECK(h.matrix().is_unitary());
}

TEST_CASE("cnot permutes the target when the control is set") {
  const Gate c = booleq::cnot();
  Ket e2(4);
  e2[2] = Amplitude(1);
  Ket e3(4);
  e3[3] = Amplitude(1);
  CHECK(c * e2 == e3);
  CHECK(c * e3 == e2);

  Ket e0(4);
  e0[0] = Amplitude(1);
  CHECK(c * e0 == e0);

  CHECK((c * c).matrix() == Matrix::identity(4));
}

TEST_CASE("gate tensor product") {
  CHECK(booleq::gate_tensor(booleq::identity_gate(2), booleq::identity_gate(2))
            .matrix() == Matrix::identity(4));
  const Gate hi = booleq::gate_tensor(booleq::hadamard(),
                                      booleq::identity_gate(2));
  CHECK(hi.matrix().is_unitary());
  CHECK(hi.matrix().at(0, 0) == kInvSqrt2);
  CHECK(hi.matrix().at(0, 1) == Amplitude());
  CHECK(hi.matrix().at(2, 0) == kInvSqrt2);
  CHECK(hi.matrix().at(3, 3) == -kInvSqrt2);
}

TEST_CASE("non-unitary matrices are rejected as gates") {
  Matrix m(2);
  m.at(0, 0) = Amplitude(2);
  m.at(1, 1) = Amplitude(1);
  CHECK_THROWS_AS(Gate{m}, std::domain_error);
}

TEST_CASE("composite matrix equals its printed form") {
  const Gate assembled = booleq::bell_matrix();
  CHECK(assembled.matrix() == expected_bell_matrix());
  CHECK(assembled.matrix() ==
        (booleq::cnot() *
         booleq::gate_tensor(booleq::hadamard(), booleq::identity_gate(2)))
            .matrix());
  CHECK(assembled.matrix().at(0, 0) == kInvSqrt2);
  CHECK(assembled.matrix().at(2, 3) == -kInvSqrt2);
  CHECK(assembled.matrix().is_unitary());
}

TEST_CASE("bell states match the closed form for all four inputs") {
  for (unsigned x = 0; x < 2; ++x) {
    for (unsigned y = 0; y < 2; ++y) {
      const auto state = booleq::bell_state(x, y);
      CHECK(state.x == x);
      CHECK(state.y == y);
      CHECK(state.ket == booleq::bell_closed_form(x, y));
    }
  }
}

TEST_CASE("bell state values") {
  CHECK(booleq::bell_state(0, 0).ket == scaled_bell(1, 0, 0, 1));
  CHECK(booleq::bell_state(0, 1).ket == scaled_bell(0, 1, 1, 0));
  CHECK(booleq::bell_state(1, 0).ket == scaled_bell(1, 0, 0, -1));
  CHECK(booleq::bell_state(1, 1).ket == scaled_bell(0, 1, -1, 0));
  CHECK(booleq::bell_closed_form(1, 0) == scaled_bell(1, 0, 0, -1));
}

TEST_CASE("bell states agree with the standard quadruple") {
  // phi+ = (|00> + |11>)/sqrt2, phi- = (|00> - |11>)/sqrt2,
  // psi+ = (|01> + |10>)/sqrt2, psi- = (|01> - |10>)/sqrt2
  CHECK(booleq::bell_state(0, 0).ket == scaled_bell(1, 0, 0, 1));   // phi+
  CHECK(booleq::bell_state(1, 0).ket == scaled_bell(1, 0, 0, -1));  // phi-
  CHECK(booleq::bell_state(0, 1).ket == scaled_bell(0, 1, 1, 0));   // psi+
  CHECK(booleq::bell_state(1, 1).ket == scaled_bell(0, 1, -1, 0));  // psi-
}

TEST_CASE("bell states are exactly orthonormal") {
  const unsigned pairs[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (unsigned a = 0; a < 4; ++a) {
    for (unsigned b = 0; b < 4; ++b) {
      const Amplitude ip = booleq::inner_product(
          booleq::bell_state(pairs[a][0], pairs[a][1]).ket,
          booleq::bell_state(pairs[b][0], pairs[b][1]).ket);
      CHECK(ip == Amplitude(a == b ? 1 : 0));
    }
  }
}

TEST_CASE("unit norm of every bell state") {
  for (unsigned x = 0; x < 2; ++x) {
    for (unsigned y = 0; y < 2; ++y) {
      const Ket k = booleq::bell_state(x, y).ket;
      CHECK(booleq::inner_product(k, k) == Amplitude(1));
      for (unsigned i = 0; i < 4; ++i) {
        CHECK(k[i].a().is_zero());
        CHECK(k[i].ai().is_zero());
        CHECK(k[i].bi().is_zero());
      }
    }
  }
}

TEST_CASE("non-bit inputs are rejected") {
  CHECK_THROWS_AS(booleq::bell_state(2, 0), std::out_of_range);
  CHECK_THROWS_AS(booleq::bell_state(0, 5), std::out_of_range);
  CHECK_THROWS_AS(booleq::bell_closed_form(3, 1), std::out_of_range);
}
