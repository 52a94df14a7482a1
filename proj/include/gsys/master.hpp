#ifndef GSYS_MASTER_HPP
#define GSYS_MASTER_HPP

#include <optional>
#include <string>

#include "gsys/gauge.hpp"
#include "gsys/linalg.hpp"

namespace gsys {

struct SolveBounds {
    int max_res = 3;
    int coeff_degree = 3;
};

struct CompletionOutcome {
    bool ok = false;
    MasterFunction S;
    Poly residual;
    std::string message;
};

// Homological-perturbation completion: finds corrections of resolution
// degrees 1..max_res with base-coefficient degree <= coeff_degree such that
// (S,S) = 0 exactly. The graded coefficient system is solved by exact linear
// algebra; undetermined coefficients of delta-closed directions are fixed by
// the higher-degree equations themselves (the system is assembled whole).
CompletionOutcome complete_master(const GaugeSystem& sys,
                                  const MasterFunction& S0, SolveBounds b);

// Same bounded solve applied to (S,V) = 0, linear in the corrections.
CompletionOutcome complete_dynamics(const GaugeSystem& sys, const Poly& V0,
                                    const MasterFunction& S, SolveBounds b);

struct MembershipCertificate {
    std::vector<Poly> a; // coefficients of the constraints
    std::vector<Poly> b; // coefficients of the gauge generators
    int degree_bound = 0;
};

// Bounded-degree exact solve of U = sum a_i T^i + sum b_j R_j. Absence of a
// certificate at the bound is inconclusive, not a disproof.
std::optional<MembershipCertificate>
ideal_membership(const GaugeSystem& sys, const Poly& U, int degree_bound);

struct ProjectibilityItem {
    std::string generator;
    Poly bracket;
    bool in_ideal = false;
    std::optional<MembershipCertificate> cert;
};

struct ProjectibilityReport {
    std::vector<ProjectibilityItem> items;
    bool projectible = false;
    bool inconclusive = false;
    // cohomological route (Proposition-1 style cross-check), when S is given
    std::optional<bool> cocycle_route;
    std::optional<int> extension_freedom; // kernel dimension of the extension solve
};

ProjectibilityReport check_projectible(const GaugeSystem& sys, const Poly& U,
                                       int degree_bound,
                                       const MasterFunction* S = nullptr,
                                       int res_cap = 3);

// Solves target + sum_i x_i columns[i] = 0 exactly over the rationals.
std::optional<std::vector<Rat>>
solve_poly_linear(const Poly& target, const std::vector<Poly>& columns,
                  std::vector<std::vector<Rat>>* nullsp = nullptr);

// Extends U to a D-cocycle U + X with X spanned by `basis`; returns the
// extension X and (optionally) the solution-space dimension.
std::optional<Poly> extend_to_cocycle(const Derivation& D, const Poly& U,
                                      const std::vector<Monomial>& basis,
                                      int* freedom = nullptr);

} // namespace gsys

#endif
