#ifndef GSYS_DERIVATION_HPP
#define GSYS_DERIVATION_HPP

#include <functional>
#include <vector>

#include "gsys/bracket.hpp"
#include "gsys/poly.hpp"

namespace gsys {

// First-order differential operator sum_v coeff_v * dL_v, coefficients
// multiplying from the left.
class Derivation {
public:
    explicit Derivation(ChartPtr chart) : chart_(std::move(chart)) {}

    void add(const Poly& coeff, int var);
    Poly apply(const Poly& F) const;
    Poly coefficient(int var) const;
    const ChartPtr& chart() const { return chart_; }
    const std::vector<std::pair<Poly, int>>& terms() const { return terms_; }

    // Largest growth in base-coordinate degree a single application can cause.
    int base_degree_growth() const;

private:
    ChartPtr chart_;
    std::vector<std::pair<Poly, int>> terms_;
};

// The derivation F -> bracket(gen, F), restricted coefficientwise by `restr`
// (identity when nullptr). Only variables passing `keep` get a term.
Derivation derivation_from_bracket(const BracketTable& table, const Poly& gen,
                                   const std::function<bool(int)>& keep,
                                   Poly (*restr)(const Poly&) = nullptr);

// d = sum_A (-1)^{eps A} dphi^A dL_{phi^A} acting on L-functions.
Derivation de_rham(const ChartPtr& chart);

} // namespace gsys

#endif
