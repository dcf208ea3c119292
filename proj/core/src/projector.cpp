#include "booleq/projector.hpp"

#include <stdexcept>

#include "booleq/boole.hpp"

namespace booleq {

Matrix projector(unsigned d, unsigned x) {
  const Ket k = basis_ket(d, x);
  return outer_product(k, k);
}

Polynomial SymbolicProjector::trace() const {
  Polynomial t;
  for (const auto& p : diagonal) {
    t += p;
  }
  return t;
}

std::vector<std::vector<Polynomial>> SymbolicProjector::full_matrix() const {
  std::vector<std::vector<Polynomial>> m(dim, std::vector<Polynomial>(dim));
  for (unsigned k = 0; k < dim; ++k) {
    m[k][k] = diagonal[k];
  }
  return m;
}

Matrix SymbolicProjector::evaluate(const Rational& at) const {
  Matrix m(dim);
  for (unsigned k = 0; k < dim; ++k) {
    m.at(k, k) = Amplitude(diagonal[k].eval(at));
  }
  return m;
}

SymbolicProjector symbolic_projector(unsigned d) {
  if (d == 0) {
    throw std::domain_error("symbolic projector: dimension must be >= 1");
  }
  SymbolicProjector out;
  out.dim = d;
  out.diagonal.reserve(d);
  for (unsigned k = 0; k < d; ++k) {
    out.diagonal.push_back(lagrange_component(d, k));
  }
  return out;
}

Matrix completeness_sum(unsigned d) {
  if (d == 0) {
    throw std::domain_error("completeness sum: dimension must be >= 1");
  }
  // build the symbolic ket once and evaluate it per node; same formula
  // path as projector(d, x), without reconstructing d polynomials d times
  const SymbolicKet sym = symbolic_ket(d);
  Matrix sum(d);
  for (unsigned x = 0; x < d; ++x) {
    const Ket k = sym.evaluate(Rational(static_cast<long>(x)));
    sum = sum + outer_product(k, k);
  }
  return sum;
}

}  // namespace booleq
