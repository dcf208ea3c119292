#pragma once

#include <vector>

#include "booleq/ket.hpp"
#include "booleq/matrix.hpp"
#include "booleq/polynomial.hpp"

namespace booleq {

// |x><x| for the d-level basis: hermitian, idempotent, trace 1.
// Throws std::out_of_range for x >= d.
Matrix projector(unsigned d, unsigned x);

// Projection operator with the symbol left in place. The solution family is
// diagonal by construction, so only the diagonal is stored; the full-matrix
// view is materialized on demand.
struct SymbolicProjector {
  unsigned dim = 0;
  std::vector<Polynomial> diagonal;

  // Sum of the diagonal; equals the constant polynomial 1.
  Polynomial trace() const;

  std::vector<std::vector<Polynomial>> full_matrix() const;
  Matrix evaluate(const Rational& at) const;
};

SymbolicProjector symbolic_projector(unsigned d);

// sum_{x=0}^{d-1} |x><x|; equals the d-dimensional identity exactly.
Matrix completeness_sum(unsigned d);

}  // namespace booleq
