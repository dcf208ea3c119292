#pragma once

#include <string>

#include "booleq/gate.hpp"
#include "booleq/ket.hpp"
#include "booleq/matrix.hpp"
#include "booleq/projector.hpp"

namespace booleq::render {

// Text forms use the exact literal grammars; LaTeX forms mirror the way the
// objects are conventionally displayed (factored Lagrange entries, pmatrix
// column vectors, a pulled-out 1/sqrt(2) prefactor for Bell states).

std::string ket_text(const Ket& k);
std::string ket_latex(const Ket& k);

std::string symbolic_ket_text(const SymbolicKet& k);
std::string symbolic_ket_latex(const SymbolicKet& k);

// "diag(...)" when diagonal, otherwise one row per line.
std::string matrix_text(const Matrix& m);
std::string matrix_latex(const Matrix& m);

std::string symbolic_projector_text(const SymbolicProjector& p);
std::string symbolic_projector_latex(const SymbolicProjector& p);

// Factored display of lagrange_component(d, k) with a positive integer
// multiplier, e.g. "2x(2-x)"; the common 1/(d-1)! prefactor is left to the
// caller. The expanded polynomial remains the source of truth for equality.
std::string lagrange_factored(unsigned d, unsigned k);

// "1/(d-1)!" prefactor in LaTeX, empty when (d-1)! = 1.
std::string lagrange_prefactor_latex(unsigned d);

std::string rational_latex(const Rational& r);
std::string amplitude_latex(const Amplitude& v);
std::string polynomial_latex(const Polynomial& p);

// "\frac{1}{\sqrt{2}}\begin{pmatrix}...\end{pmatrix}" with integer entries.
std::string bell_latex(const BellState& b);

// Decimal annotation used by the --approx display (never for comparisons).
std::string approx_amplitude(const Amplitude& v);
std::string approx_ket(const Ket& k);

}  // namespace booleq::render
