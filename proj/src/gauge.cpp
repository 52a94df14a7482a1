#include "gsys/gauge.hpp"

#include <stdexcept>

namespace gsys {

namespace {

bool multivector_only(const Chart& ch, const Poly& p) {
    for (const auto& [m, c] : p.terms())
        for (auto& [v, e] : m.f) {
            const VarInfo& vi = ch.var(v);
            bool ok = vi.sector == Sector::X &&
                      (vi.kind == VarKind::Base || vi.kind == VarKind::Momentum);
            if (!ok) return false;
        }
    return true;
}

} // namespace

void GaugeSystemSpec::validate() const {
    const Chart& ch = *chart;
    auto expect = [&](const Poly& p, int deg, const char* what) {
        if (p.is_zero()) return;
        if (!multivector_only(ch, p) || !p.is_homogeneous(GradingName::Momentum) ||
            p.grading_of(GradingName::Momentum) != deg)
            throw std::invalid_argument(std::string(what) +
                                        ": wrong momentum degree or variables");
    };
    for (const Poly& t : T) expect(t, 0, "constraint");
    for (const Poly& r : R) {
        if (r.is_zero()) throw std::invalid_argument("zero gauge generator");
        expect(r, 1, "gauge generator");
    }
    expect(P, 2, "bivector");
    expect(V, 1, "dynamics vector field");
}

GaugeSystem::GaugeSystem(GaugeSystemSpec s)
    : spec(std::move(s)),
      odd(odd_table(spec.chart,
                    spec.connection.empty() ? nullptr : &spec.connection)),
      even(even_table(spec.chart)) {
    spec.validate();
}

MasterFunction assemble_S0(const GaugeSystem& sys) {
    const ChartPtr& c = sys.chart();
    const Chart& ch = *c;
    Poly S(c);
    for (size_t a = 0; a < sys.spec.T.size(); ++a)
        S += sys.spec.T[a] * Poly::var(c, ch.require("etas" + std::to_string(a + 1)));
    for (size_t al = 0; al < sys.spec.R.size(); ++al)
        S += Poly::var(c, ch.require("c" + std::to_string(al + 1))) * sys.spec.R[al];
    S += sys.spec.P;
    if (!S.is_zero()) {
        if (S.grading_of(GradingName::Ghost) != 2 ||
            S.grading_of(GradingName::Parity) != 0)
            throw std::invalid_argument("assembled S0 violates gh = 2, eps = 0");
    }
    MasterFunction mf;
    mf.value = S;
    return mf;
}

Derivation koszul_tate_delta(const GaugeSystem& sys) {
    const ChartPtr& c = sys.chart();
    Derivation d(c);
    for (size_t a = 0; a < sys.spec.T.size(); ++a)
        d.add(sys.spec.T[a], c->require("eta" + std::to_string(a + 1)));
    for (size_t al = 0; al < sys.spec.R.size(); ++al)
        d.add(sys.spec.R[al], c->require("cs" + std::to_string(al + 1)));
    return d;
}

MasterReport check_master(const GaugeSystem& sys, const MasterFunction& S) {
    MasterReport rep;
    const ChartPtr& c = sys.chart();
    rep.residual = sys.odd.apply(S.value, S.value);
    rep.ok = rep.residual.is_zero();
    for (const auto& [deg, pd] : rep.residual.components(GradingName::Momentum))
        for (const auto& [res, p] : pd.components(GradingName::Resolution))
            rep.graded[{deg, res}] = p;
    Poly S1 = S.momentum_part(1), S2 = S.momentum_part(2), S3 = S.momentum_part(3);
    rep.QQ = sys.odd.apply(S1, S1);
    rep.QPi = sys.odd.apply(S1, S2);
    rep.PiPi_2QXi = sys.odd.apply(S2, S2) + sys.odd.apply(S1, S3) * Rat(2);
    (void)c;
    return rep;
}

Derivation extract_Q(const GaugeSystem& sys, const Poly& S) {
    const ChartPtr& c = sys.chart();
    return derivation_from_bracket(
        sys.odd, S,
        [&](int v) {
            VarKind k = c->var(v).kind;
            return k == VarKind::Base || k == VarKind::AntighostFiber ||
                   k == VarKind::GhostFiber;
        },
        &restrict_to_M);
}

Derivation extract_Q_full(const GaugeSystem& sys, const Poly& S1) {
    const ChartPtr& c = sys.chart();
    return derivation_from_bracket(sys.odd, S1, [&](int v) {
        VarKind k = c->var(v).kind;
        return k != VarKind::Velocity && k != VarKind::VelocityMomentum;
    });
}

Derivation extract_Qhat(const GaugeSystem& sys, const Poly& Psi) {
    const ChartPtr& c = sys.chart();
    return derivation_from_bracket(
        sys.even, Psi,
        [&](int v) {
            VarKind k = c->var(v).kind;
            return k == VarKind::Base || k == VarKind::AntighostFiber ||
                   k == VarKind::GhostFiber || k == VarKind::Velocity;
        },
        &restrict_to_L);
}

} // namespace gsys
