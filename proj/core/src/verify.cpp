#include "booleq/verify.hpp"

#include <stdexcept>

#include "booleq/boole.hpp"
#include "booleq/gate.hpp"
#include "booleq/ket.hpp"
#include "booleq/projector.hpp"

namespace booleq {

namespace {

CheckResult idempotency_check(unsigned d,
                              const std::vector<Polynomial>& comps) {
  for (unsigned k = 0; k < d; ++k) {
    if (reduce_mod_boole(comps[k] * comps[k], d) != comps[k]) {
      return {"idempotent-mod-ideal", d, false,
              "l_" + std::to_string(k) + "^2 is not l_" + std::to_string(k) +
                  " mod the ideal"};
    }
  }
  return {"idempotent-mod-ideal", d, true,
          "l_k^2 = l_k for k=0.." + std::to_string(d - 1)};
}

CheckResult partition_check(unsigned d, const std::vector<Polynomial>& comps) {
  Polynomial sum;
  for (const auto& p : comps) {
    sum += p;
  }
  if (sum != Polynomial(1)) {
    return {"partition-of-unity", d, false, "sum_k l_k = " + sum.str()};
  }
  return {"partition-of-unity", d, true, "sum_k l_k = 1 exactly"};
}

CheckResult orthogonality_check(unsigned d,
                                const std::vector<Polynomial>& comps) {
  unsigned pairs = 0;
  for (unsigned j = 0; j < d; ++j) {
    for (unsigned k = j + 1; k < d; ++k) {
      if (!reduce_mod_boole(comps[j] * comps[k], d).is_zero()) {
        return {"orthogonal-mod-ideal", d, false,
                "l_" + std::to_string(j) + " * l_" + std::to_string(k) +
                    " is nonzero mod the ideal"};
      }
      ++pairs;
    }
  }
  return {"orthogonal-mod-ideal", d, true,
          std::to_string(pairs) + " pairs vanish mod the ideal"};
}

CheckResult kronecker_check(unsigned d, const std::vector<Polynomial>& comps) {
  for (unsigned k = 0; k < d; ++k) {
    for (unsigned m = 0; m < d; ++m) {
      const Rational expected(k == m ? 1 : 0);
      if (comps[k].eval(Rational(static_cast<long>(m))) != expected) {
        return {"kronecker-eval", d, false,
                "l_" + std::to_string(k) + "(" + std::to_string(m) +
                    ") != " + expected.str()};
      }
    }
  }
  return {"kronecker-eval", d, true,
          std::to_string(d * d) + " evaluations match delta_km"};
}

CheckResult completeness_check(unsigned d) {
  if (!completeness_sum(d).is_identity()) {
    return {"completeness-sum", d, false,
            "sum_x P(x) is not the identity"};
  }
  return {"completeness-sum", d, true,
          "sum of " + std::to_string(d) + " projectors is the identity"};
}

Matrix printed_bell_matrix() {
  // 1/sqrt(2) * [[1,0,1,0],[0,1,0,1],[0,1,0,-1],[1,0,-1,0]]
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

void append_bell_suite(std::vector<CheckResult>& checks) {
  constexpr unsigned kBellDim = 2;

  bool circuit_ok = true;
  std::string circuit_witness = "all four (x,y) cases agree";
  for (unsigned x = 0; x < 2 && circuit_ok; ++x) {
    for (unsigned y = 0; y < 2 && circuit_ok; ++y) {
      if (bell_state(x, y).ket != bell_closed_form(x, y)) {
        circuit_ok = false;
        circuit_witness = "circuit and closed form differ at (x,y)=(" +
                          std::to_string(x) + "," + std::to_string(y) + ")";
      }
    }
  }
  checks.push_back(
      {"bell-circuit-closed-form", kBellDim, circuit_ok, circuit_witness});

  const Gate assembled = bell_matrix();
  const bool matrix_ok = assembled.matrix() == printed_bell_matrix();
  checks.push_back({"bell-matrix-form", kBellDim, matrix_ok,
                    matrix_ok ? "cnot * (H (x) I) has the expected entries"
                              : "assembled matrix has unexpected entries"});

  bool ortho_ok = true;
  std::string ortho_witness = "16 inner products match delta";
  for (unsigned a = 0; a < 4 && ortho_ok; ++a) {
    for (unsigned b = 0; b < 4 && ortho_ok; ++b) {
      const Amplitude ip = inner_product(bell_state(a >> 1, a & 1).ket,
                                         bell_state(b >> 1, b & 1).ket);
      if (ip != Amplitude(a == b ? 1 : 0)) {
        ortho_ok = false;
        ortho_witness = "inner product (" + std::to_string(a) + "," +
                        std::to_string(b) + ") = " + ip.str();
      }
    }
  }
  checks.push_back(
      {"bell-orthonormality", kBellDim, ortho_ok, ortho_witness});

  const bool unitary_ok =
      hadamard().matrix().is_unitary() && cnot().matrix().is_unitary() &&
      gate_tensor(hadamard(), identity_gate(2)).matrix().is_unitary() &&
      assembled.matrix().is_unitary();
  checks.push_back({"gate-unitarity", kBellDim, unitary_ok,
                    unitary_ok ? "H, cnot, H (x) I and the composite are unitary"
                               : "a gate failed the exact unitarity check"});
}

}  // namespace

VerifyReport run_verify(unsigned max_d) {
  if (max_d == 0) {
    throw std::domain_error("verify: max_d must be >= 1");
  }
  VerifyReport report;
  report.d_min = 1;
  report.d_max = max_d;
  for (unsigned d = 1; d <= max_d; ++d) {
    std::vector<Polynomial> comps;
    comps.reserve(d);
    for (unsigned k = 0; k < d; ++k) {
      comps.push_back(lagrange_component(d, k));
    }
    report.checks.push_back(idempotency_check(d, comps));
    report.checks.push_back(partition_check(d, comps));
    report.checks.push_back(orthogonality_check(d, comps));
    report.checks.push_back(kronecker_check(d, comps));
    report.checks.push_back(completeness_check(d));
  }
  append_bell_suite(report.checks);
  report.overall = true;
  for (const auto& c : report.checks) {
    if (!c.pass) {
      report.overall = false;
      break;
    }
  }
  return report;
}

}  // namespace booleq
