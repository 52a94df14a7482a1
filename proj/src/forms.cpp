#include "gsys/forms.hpp"

#include <stdexcept>

namespace gsys {

Poly interior_product(const GaugeSystem& sys, const Poly& X, const Poly& omega) {
    if (omega.is_zero()) return Poly(sys.chart());
    Rat sgn = X.is_zero() ? Rat(1)
                          : (X.grading_of(GradingName::Parity) ? Rat(-1) : Rat(1));
    return restrict_to_L(sys.even.apply(X, omega)) * sgn;
}

Poly d_form(const GaugeSystem& sys, const Poly& omega) {
    return de_rham(sys.chart()).apply(omega);
}

Poly lift_dynamics(const GaugeSystem& sys, const Poly& V) {
    return lift_by_delta(sys.even, V);
}

Poly lie_derivative_form(const GaugeSystem& sys, const Poly& V,
                         const Poly& omega) {
    const ChartPtr& chart = sys.chart();
    if (V.is_zero() || omega.is_zero()) return Poly(chart);
    int epsV = V.grading_of(GradingName::Parity);
    Rat sgn = epsV ? -1 : 1;
    Poly gamma = lift_dynamics(sys, V);
    Poly via_lift = restrict_to_L(sys.even.apply(gamma, omega)) * sgn;
    // Cartan cross-check: L_V = d i_V + (-1)^{eps V + 1} i_V d
    Poly cartan = d_form(sys, interior_product(sys, V, omega)) +
                  interior_product(sys, V, d_form(sys, omega)) *
                      (epsV ? Rat(1) : Rat(-1));
    if (!(via_lift == cartan))
        throw std::logic_error(
            "lie_derivative_form: lift route and Cartan route disagree");
    return via_lift;
}

Poly apply_vector_field(const GaugeSystem& sys, const Poly& V, const Poly& f) {
    return restrict_to_M(sys.odd.apply(V, f));
}

} // namespace gsys
