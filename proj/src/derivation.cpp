#include "gsys/derivation.hpp"

namespace gsys {

void Derivation::add(const Poly& coeff, int var) {
    if (!coeff.is_zero()) terms_.push_back({coeff, var});
}

Poly Derivation::apply(const Poly& F) const {
    Poly out(chart_);
    for (const auto& [c, v] : terms_) out += c * F.dleft(v);
    return out;
}

Poly Derivation::coefficient(int var) const {
    Poly out(chart_);
    for (const auto& [c, v] : terms_)
        if (v == var) out += c;
    return out;
}

int Derivation::base_degree_growth() const {
    int g = 0;
    for (const auto& [c, v] : terms_) {
        int loss = chart_->var(v).kind == VarKind::Base ? 1 : 0;
        g = std::max(g, c.base_degree() - loss);
    }
    return g;
}

Derivation derivation_from_bracket(const BracketTable& table, const Poly& gen,
                                   const std::function<bool(int)>& keep,
                                   Poly (*restr)(const Poly&)) {
    const ChartPtr& chart = table.chart();
    Derivation D(chart);
    for (int v = 0; v < chart->size(); ++v) {
        if (!keep(v)) continue;
        Poly c = table.apply(gen, Poly::var(chart, v));
        if (restr) c = restr(c);
        D.add(c, v);
    }
    return D;
}

Derivation de_rham(const ChartPtr& chart) {
    Derivation D(chart);
    for (int i = 0; i < chart->size(); ++i) {
        const VarInfo& v = chart->var(i);
        if (v.kind == VarKind::Base || v.kind == VarKind::AntighostFiber ||
            v.kind == VarKind::GhostFiber) {
            int dv = chart->velocity_of(i);
            if (dv < 0) continue;
            Rat sgn = v.g.parity ? -1 : 1;
            D.add(Poly::var(chart, dv) * sgn, i);
        }
    }
    return D;
}

} // namespace gsys
