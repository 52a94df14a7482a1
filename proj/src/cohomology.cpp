#include "gsys/cohomology.hpp"

#include <stdexcept>

namespace gsys {

namespace {

Window window_of(const Truncation& t) {
    Window w;
    w.ghost = t.ghost;
    w.base_deg_max = t.base_poly_degree;
    w.res_min = 0;
    w.res_max = t.res_cap;
    if (t.form_mode) {
        w.form = t.weight;
        w.allow_velocity = true;
        w.allow_momentum = false;
        w.deg_min = 0;
        w.deg_max = 0; // no momenta on the Lagrangian chart
    } else {
        w.deg_min = t.weight;
        w.deg_max = t.weight;
        w.allow_velocity = false;
    }
    return w;
}

// largest raise of momentum or resolution degree a derivation term can cause
struct DerivationShifts {
    int ghost = 0;
    int res_raise = 0;
    int base_growth = 0;
    int weight_shift_min = 0, weight_shift_max = 0; // Deg (or form) shift
};

int monomial_res(const Chart& ch, const Monomial& m) {
    int r = 0;
    for (auto& [v, e] : m.f) {
        const auto& g = ch.var(v).g;
        if (g.resolution) r += *g.resolution * e;
    }
    return r;
}

int monomial_weight(const Chart& ch, const Monomial& m, bool form_mode) {
    int d = 0;
    for (auto& [v, e] : m.f) {
        const auto& g = ch.var(v).g;
        if (form_mode) d += g.form * e;
        else if (g.momentum) d += *g.momentum * e;
    }
    return d;
}

DerivationShifts shifts_of(const Derivation& D, bool form_mode) {
    const Chart& ch = *D.chart();
    DerivationShifts s;
    bool first = true;
    bool any = false;
    for (const auto& [coeff, v] : D.terms()) {
        if (coeff.is_zero()) continue;
        const Grading& gv = ch.var(v).g;
        for (const auto& [m, c] : coeff.terms()) {
            any = true;
            int gh = 0, base = 0;
            for (auto& [vv, e] : m.f) {
                gh += ch.var(vv).g.ghost * e;
                if (ch.var(vv).kind == VarKind::Base) base += e;
            }
            int dgh = gh - gv.ghost;
            if (first) s.ghost = dgh;
            else if (s.ghost != dgh)
                throw std::domain_error("derivation is not ghost-homogeneous");
            first = false;
            s.base_growth = std::max(
                s.base_growth, base - (ch.var(v).kind == VarKind::Base ? 1 : 0));
            int vres = gv.resolution ? *gv.resolution : 0;
            s.res_raise = std::max(s.res_raise, monomial_res(ch, m) - vres);
            int vw = form_mode ? gv.form
                               : (gv.momentum ? *gv.momentum : 0);
            int dw = monomial_weight(ch, m, form_mode) - vw;
            s.weight_shift_min = std::min(s.weight_shift_min, dw);
            s.weight_shift_max = std::max(s.weight_shift_max, dw);
        }
    }
    if (!any) s = DerivationShifts{};
    return s;
}

} // namespace

TruncBasis truncation_basis(const ChartPtr& chart, const Truncation& t) {
    TruncBasis b;
    b.monomials = enumerate_basis(chart, window_of(t));
    for (const auto& m : b.monomials) b.index.intern(m);
    return b;
}

int ghost_shift(const Derivation& D) { return shifts_of(D, false).ghost; }

SparseMat operator_matrix(const Derivation& D, const Truncation& src,
                          TruncBasis* src_basis, TruncBasis* tgt_basis) {
    const ChartPtr& chart = D.chart();
    auto s = shifts_of(D, src.form_mode);
    if (s.weight_shift_min != 0 || s.weight_shift_max != 0)
        throw std::domain_error(
            "derivation does not preserve the truncation weight");
    Truncation tgt = src;
    tgt.ghost = src.ghost + s.ghost;
    tgt.base_poly_degree = src.base_poly_degree + std::max(0, s.base_growth);
    tgt.res_cap = src.res_cap + std::max(0, s.res_raise);

    TruncBasis sb = truncation_basis(chart, src);
    TruncBasis tb = truncation_basis(chart, tgt);

    SparseMat M;
    M.resize(tb.index.size(), sb.index.size());
    for (int j = 0; j < (int)sb.monomials.size(); ++j) {
        Poly e(chart);
        e.add_term(sb.monomials[j], 1);
        Poly im = D.apply(e);
        for (const auto& [m, c] : im.terms()) {
            int r = tb.index.find(m);
            if (r < 0)
                throw std::domain_error(
                    "unbounded degree growth at the truncation: monomial " +
                    monomial_str(*chart, m));
            M.set(r, j, c);
        }
    }
    if (src_basis) *src_basis = std::move(sb);
    if (tgt_basis) *tgt_basis = std::move(tb);
    return M;
}

CohomologyReport cohomology_at(const Derivation& D, const Truncation& t) {
    const ChartPtr& chart = D.chart();
    CohomologyReport rep;
    int shift = ghost_shift(D);

    TruncBasis src, tgt_up;
    SparseMat M_out = operator_matrix(D, t, &src, &tgt_up);
    rep.dim_source = (int)src.monomials.size();
    rep.rank_out = rank(M_out);
    rep.dim_kernel = rep.dim_source - rep.rank_out;
    auto ker = nullspace(M_out);

    // incoming differential from ghost l - shift
    Truncation below = t;
    below.ghost = t.ghost - shift;
    TruncBasis bsrc, btgt;
    SparseMat M_in = operator_matrix(D, below, &bsrc, &btgt);

    // intersect the incoming image with the span of the window of t:
    // combinations of columns whose coordinates outside the window vanish
    std::vector<int> inside(btgt.monomials.size(), -1);
    for (int i = 0; i < (int)btgt.monomials.size(); ++i)
        inside[i] = src.index.find(btgt.monomials[i]);
    SparseMat outside_rows;
    outside_rows.resize(M_in.rows, M_in.cols);
    bool has_outside = false;
    for (int c = 0; c < M_in.cols; ++c)
        for (const auto& [r, v] : M_in.col[c])
            if (inside[r] < 0) {
                outside_rows.col[c][r] = v;
                has_outside = true;
            }
    std::vector<std::vector<Rat>> combos;
    if (has_outside) combos = nullspace(outside_rows);
    SparseMat image_in_window;
    image_in_window.resize(rep.dim_source, 0);
    auto add_image_col = [&](const std::map<int, Rat>& col) {
        image_in_window.col.push_back({});
        for (const auto& [r, v] : col)
            if (inside[r] >= 0) image_in_window.col.back()[inside[r]] = v;
        image_in_window.cols = (int)image_in_window.col.size();
    };
    if (!has_outside) {
        for (int c = 0; c < M_in.cols; ++c) add_image_col(M_in.col[c]);
    } else {
        for (const auto& combo : combos) {
            std::map<int, Rat> col;
            for (int c = 0; c < M_in.cols; ++c) {
                if (combo[c] == 0) continue;
                for (const auto& [r, v] : M_in.col[c]) {
                    Rat& t2 = col[r];
                    t2 += combo[c] * v;
                }
            }
            add_image_col(col);
        }
    }
    rep.rank_in = rank(image_in_window);
    rep.dim_H = rep.dim_kernel - rep.rank_in;
    rep.k_gt_l = !t.form_mode && t.weight > t.ghost;

    // representatives: kernel vectors reduced modulo the incoming image
    std::vector<std::vector<Rat>> reps;
    SparseMat accum = image_in_window;
    for (auto& kv : ker) {
        std::vector<Rat> red = reduce_mod_columns(accum, kv);
        bool zero = true;
        for (const Rat& x : red)
            if (x != 0) { zero = false; break; }
        if (zero) continue;
        reps.push_back(red);
        accum.col.push_back({});
        for (int i = 0; i < (int)red.size(); ++i)
            if (red[i] != 0) accum.col.back()[i] = red[i];
        accum.cols = (int)accum.col.size();
        if ((int)reps.size() >= rep.dim_H) break;
    }
    for (auto& rv : reps) {
        Poly p(chart);
        for (int i = 0; i < (int)rv.size(); ++i)
            if (rv[i] != 0) p.add_term(src.monomials[i], rv[i]);
        rep.representatives.push_back(std::move(p));
    }
    return rep;
}

std::optional<Poly> coboundary_preimage(const Derivation& D, const Poly& F,
                                        const Truncation& t) {
    const ChartPtr& chart = D.chart();
    if (!D.apply(F).is_zero())
        throw std::invalid_argument("coboundary_preimage: F is not closed");
    if (F.is_zero()) return Poly(chart);
    int shift = ghost_shift(D);
    Truncation below = t;
    below.ghost = F.grading_of(GradingName::Ghost) - shift;
    TruncBasis bsrc, btgt;
    SparseMat M = operator_matrix(D, below, &bsrc, &btgt);
    std::vector<Rat> b(btgt.index.size(), 0);
    for (const auto& [m, c] : F.terms()) {
        int r = btgt.index.find(m);
        if (r < 0) return std::nullopt; // F outside the reachable window
        b[r] = c;
    }
    LinSolution sol = solve(M, b);
    if (!sol.consistent) return std::nullopt;
    Poly G(chart);
    for (int i = 0; i < (int)bsrc.monomials.size(); ++i)
        if (sol.particular[i] != 0) G.add_term(bsrc.monomials[i], sol.particular[i]);
    return G;
}

} // namespace gsys
