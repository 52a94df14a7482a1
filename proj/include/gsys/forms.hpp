#ifndef GSYS_FORMS_HPP
#define GSYS_FORMS_HPP

#include "gsys/gauge.hpp"

namespace gsys {

// i_X omega = (-1)^{eps X} {X, omega}|_L. For a vector field X = X^A phi*_A
// this acts as the usual contraction: i_X dx^j = X^j. Degree-0 input gives 0.
Poly interior_product(const GaugeSystem& sys, const Poly& X, const Poly& omega);

// Lie derivative along V of a form on L, computed through the lift
// Gamma = {Delta, V} as (-1)^{eps V} {Gamma, omega}|_L. The Cartan route
// d(i_V w) + (-1)^{eps V + 1} i_V(d w) is evaluated as an internal
// cross-check; disagreement throws (it would be an engine sign bug).
Poly lie_derivative_form(const GaugeSystem& sys, const Poly& V,
                         const Poly& omega);

// V(f) = (V, f) restricted to M, for a vector field and a function.
Poly apply_vector_field(const GaugeSystem& sys, const Poly& V, const Poly& f);

// Exterior differential on L-functions.
Poly d_form(const GaugeSystem& sys, const Poly& omega);

// Gamma = {Delta, V}.
Poly lift_dynamics(const GaugeSystem& sys, const Poly& V);

} // namespace gsys

#endif
