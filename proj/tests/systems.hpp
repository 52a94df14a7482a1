#ifndef GSYS_TESTS_SYSTEMS_HPP
#define GSYS_TESTS_SYSTEMS_HPP

#include "gsys/gauge.hpp"

namespace gsys::testsys {

inline Poly v(const ChartPtr& c, const std::string& n) { return Poly::var(c, n); }

// Heisenberg group data: gauge generator Z, weak Poisson bivector from X, Y,
// rotation dynamics.
inline GaugeSystem heisenberg() {
    GaugeSystemSpec s;
    s.name = "heisenberg";
    s.base_names = {"x", "y", "z"};
    s.chart = build_system_chart(s.base_names, 0, 1);
    auto c = s.chart;
    Poly X = v(c, "xs") - v(c, "y") * v(c, "zs") * Rat(1, 2);
    Poly Y = v(c, "ys") + v(c, "x") * v(c, "zs") * Rat(1, 2);
    s.R = {v(c, "zs")};
    s.P = wedge(X, Y);
    s.V = v(c, "y") * v(c, "xs") - v(c, "x") * v(c, "ys");
    return GaugeSystem(std::move(s));
}

// Contact manifold of dimension 2n+1 as a Jacobi structure.
inline GaugeSystem contact(int n) {
    GaugeSystemSpec s;
    s.name = "contact-" + std::to_string(n);
    s.base_names = {"t"};
    for (int i = 1; i <= n; ++i) s.base_names.push_back("q" + std::to_string(i));
    for (int i = 1; i <= n; ++i) s.base_names.push_back("p" + std::to_string(i));
    s.chart = build_system_chart(s.base_names, 0, 1);
    auto c = s.chart;
    s.R = {v(c, "ts")};
    Poly P(c);
    Poly V(c);
    for (int i = 1; i <= n; ++i) {
        Poly A = v(c, "qs" + std::to_string(i)) +
                 v(c, "p" + std::to_string(i)) * v(c, "ts");
        Poly B = v(c, "ps" + std::to_string(i));
        P += wedge(A, B);
        V += v(c, "q" + std::to_string(i)) * v(c, "qs" + std::to_string(i)) -
             v(c, "p" + std::to_string(i)) * v(c, "ps" + std::to_string(i));
    }
    s.P = P;
    s.V = V;
    return GaugeSystem(std::move(s));
}

// Single abelian constraint, no gauge symmetry.
inline GaugeSystem abelian_constraint() {
    GaugeSystemSpec s;
    s.name = "abelian";
    s.base_names = {"x"};
    s.chart = build_system_chart(s.base_names, 1, 0);
    s.T = {v(s.chart, "x")};
    return GaugeSystem(std::move(s));
}

// Heisenberg 1-form theta = dz + (y dx - x dy)/2 on the Lagrangian chart.
inline Poly heis_theta(const ChartPtr& c) {
    return v(c, "dz") +
           (v(c, "y") * v(c, "dx") - v(c, "x") * v(c, "dy")) * Rat(1, 2);
}

// Contact 1-form theta = dt - sum p_i dq_i.
inline Poly contact_theta(const ChartPtr& c, int n) {
    Poly th = v(c, "dt");
    for (int i = 1; i <= n; ++i)
        th -= v(c, "p" + std::to_string(i)) * v(c, "dq" + std::to_string(i));
    return th;
}

} // namespace gsys::testsys

#endif
