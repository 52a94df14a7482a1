#ifndef GSYS_GAUGE_HPP
#define GSYS_GAUGE_HPP

#include <optional>
#include <string>

#include "gsys/bracket.hpp"
#include "gsys/derivation.hpp"
#include "gsys/poly.hpp"

namespace gsys {

// The initial data of a gauge system: constraints T^a, gauge generators
// R_alpha (x*-linear), an optional weak Poisson bivector P (x*-quadratic),
// an optional dynamics vector field V, connection coefficients, and optional
// commutation witnesses giving [[R_a, R_b]] as an exact combination.
struct GaugeSystemSpec {
    std::string name;
    ChartPtr chart; // full PiT(N) chart
    std::vector<std::string> base_names;
    std::vector<Poly> T;
    std::vector<Poly> R;
    Poly P;
    Poly V;
    ConnectionData connection;
    std::map<std::pair<int, int>, Poly> commutator_witness;

    // Checks the grading invariants: Deg(P) = 2, Deg(R) = 1, entries built
    // from base coordinates and x* only. Throws on violation.
    void validate() const;
};

// Assembled engine for one system: bracket tables and the seed S0.
struct GaugeSystem {
    GaugeSystemSpec spec;
    BracketTable odd;
    BracketTable even;

    explicit GaugeSystem(GaugeSystemSpec s);
    const ChartPtr& chart() const { return spec.chart; }
};

// A (candidate) master function with its verification state.
struct MasterFunction {
    Poly value;
    // highest resolution degree through which (S,S) = 0 was established;
    // -1 means unverified, INT_MAX-like large value means exact.
    int verified_res_bound = -1;
    bool exactly_verified = false;

    std::map<int, Poly> by_momentum() const {
        return value.components(GradingName::Momentum);
    }
    std::map<int, Poly> by_resolution() const {
        return value.components(GradingName::Resolution);
    }
    Poly momentum_part(int k) const {
        auto m = by_momentum();
        auto it = m.find(k);
        return it == m.end() ? Poly(value.chart()) : it->second;
    }
};

// S0 = T^a eta*_a + c^alpha R_alpha + P on the extended chart.
MasterFunction assemble_S0(const GaugeSystem& sys);

// delta = T^a d/d(eta^a) + R^i_alpha x*_i d/d(c*_alpha).
Derivation koszul_tate_delta(const GaugeSystem& sys);

struct MasterReport {
    Poly residual;                              // (S,S)
    std::map<std::pair<int, int>, Poly> graded; // keyed by (Deg, res)
    Poly QQ;          // (S1,S1)
    Poly QPi;         // (S1,S2)
    Poly PiPi_2QXi;   // (S2,S2) + 2 (S1,S3)
    bool ok = false;
};

MasterReport check_master(const GaugeSystem& sys, const MasterFunction& S);

// Q = (S,-)|_M as a derivation on the extended-manifold variables.
Derivation extract_Q(const GaugeSystem& sys, const Poly& S);

// The cohomology differential Q = (S^1, -) on all N-level variables.
Derivation extract_Q_full(const GaugeSystem& sys, const Poly& S1);

// Qhat = {Psi,-}|_L as a derivation on the Lagrangian variables.
Derivation extract_Qhat(const GaugeSystem& sys, const Poly& Psi);

} // namespace gsys

#endif
