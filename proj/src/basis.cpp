#include "gsys/basis.hpp"

namespace gsys {

namespace {

struct Enumerator {
    const Chart& ch;
    const Window& w;
    std::vector<Monomial> out;
    Monomial cur;

    // running totals
    int gh = 0, par = 0, deg = 0, res = 0, form = 0, base = 0;

    bool var_allowed(const VarInfo& v) const {
        switch (v.kind) {
        case VarKind::Base: return true;
        case VarKind::AntighostFiber:
        case VarKind::GhostFiber: return w.allow_fibers;
        case VarKind::Momentum: return w.allow_momentum;
        case VarKind::Velocity: return w.allow_velocity;
        case VarKind::VelocityMomentum: return w.allow_velocity_momentum;
        }
        return false;
    }

    int exponent_cap(const VarInfo& v) const {
        if (v.g.parity) return 1;
        int cap = 1 << 20;
        if (v.kind == VarKind::Base) cap = std::min(cap, w.base_deg_max - base);
        if (v.g.momentum && *v.g.momentum > 0 && w.deg_max)
            cap = std::min(cap, (*w.deg_max - deg) / *v.g.momentum);
        if (v.g.resolution && *v.g.resolution > 0 && w.res_max)
            cap = std::min(cap, (*w.res_max - res) / *v.g.resolution);
        if (v.g.form > 0 && w.form)
            cap = std::min(cap, (*w.form - form) / v.g.form);
        // every non-base even variable must be bounded by one of the windows
        if (cap >= (1 << 20))
            throw std::domain_error("unbounded window for variable " + v.name);
        return std::max(cap, 0);
    }

    void take(const VarInfo& v, int e, int sgn) {
        gh += sgn * e * v.g.ghost;
        par += sgn * e * v.g.parity;
        if (v.g.momentum) deg += sgn * e * *v.g.momentum;
        if (v.g.resolution) res += sgn * e * *v.g.resolution;
        form += sgn * e * v.g.form;
        if (v.kind == VarKind::Base) base += sgn * e;
    }

    bool over_budget() const {
        return (w.deg_max && deg > *w.deg_max) ||
               (w.res_max && res > *w.res_max) ||
               (w.form && form > *w.form) || base > w.base_deg_max;
    }

    void rec(int id) {
        if (id == ch.size()) {
            if (w.ghost && gh != *w.ghost) return;
            if (w.parity && ((par & 1) != (*w.parity & 1))) return;
            if (w.form && form != *w.form) return;
            if (deg < w.deg_min || (w.deg_max && deg > *w.deg_max)) return;
            if (res < w.res_min || (w.res_max && res > *w.res_max)) return;
            if (base > w.base_deg_max) return;
            out.push_back(cur);
            return;
        }
        const VarInfo& v = ch.var(id);
        if (!var_allowed(v)) { rec(id + 1); return; }
        int cap = exponent_cap(v);
        for (int e = 0; e <= cap; ++e) {
            if (e > 0) {
                take(v, 1, +1);
                if (e == 1) cur.f.push_back({id, 1});
                else cur.f.back().second = e;
                if (over_budget()) break;
            }
            rec(id + 1);
        }
        if (!cur.f.empty() && cur.f.back().first == id) {
            take(v, cur.f.back().second, -1);
            cur.f.pop_back();
        }
    }
};

} // namespace

std::vector<Monomial> enumerate_basis(const ChartPtr& chart, const Window& w) {
    Enumerator e{*chart, w};
    e.rec(0);
    return e.out;
}

} // namespace gsys
