#include "gsys/master.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <set>

#include "gsys/basis.hpp"

namespace gsys {

namespace {

// ---------------------------------------------------------------------------
// Degree <= 2 polynomial systems in auxiliary even parameter variables.
// Equations are Poly values on a dedicated parameter chart; the solver
// eliminates the linear block, substitutes, and falls back to shallow
// branching on residual quadratic equations.
// ---------------------------------------------------------------------------

struct ParamSystem {
    ChartPtr tchart;
    int nvars = 0;

    explicit ParamSystem(int n) : nvars(n) {
        auto ch = std::make_shared<Chart>();
        for (int i = 0; i < n; ++i)
            ch->add({"t" + std::to_string(i), base_grading(), VarKind::Base,
                     Sector::X, -1});
        tchart = ch;
    }

    Poly constant(const Rat& c) const { return Poly(tchart, c); }
    Poly tvar(int i) const { return Poly::var(tchart, i); }
};

// Affine elimination over the parameter variables.
struct AffineRow {
    std::map<int, Rat> coef;
    Rat rhs; // equation: sum coef * t = rhs
};

bool linear_in_params(const Poly& p) {
    for (const auto& [m, c] : p.terms()) {
        int d = 0;
        for (auto& [v, e] : m.f) d += e;
        if (d > 1) return false;
    }
    return true;
}

AffineRow to_row(const Poly& p) {
    AffineRow r;
    for (const auto& [m, c] : p.terms()) {
        if (m.f.empty()) r.rhs -= c;
        else r.coef[m.f[0].first] += c;
    }
    return r;
}

// Solves the affine block; returns substitutions pivot -> affine Poly in the
// free parameters, or nullopt when inconsistent.
std::optional<std::map<int, Poly>> solve_affine(const ParamSystem& ps,
                                                std::vector<AffineRow> rows) {
    // Gaussian elimination, lowest-index pivots, deterministic.
    std::vector<std::pair<int, int>> pivots; // (var, row)
    std::vector<char> used(rows.size(), 0);
    std::vector<int> vars;
    {
        std::set<int> vs;
        for (auto& r : rows)
            for (auto& [v, c] : r.coef) vs.insert(v);
        vars.assign(vs.begin(), vs.end());
    }
    for (int v : vars) {
        int pr = -1;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (used[r]) continue;
            auto it = rows[r].coef.find(v);
            if (it != rows[r].coef.end() && it->second != 0 &&
                rows[r].coef.begin()->first == v) {
                pr = (int)r;
                break;
            }
        }
        if (pr < 0) continue;
        used[pr] = 1;
        Rat p = rows[pr].coef[v];
        if (p != 1) {
            for (auto& [vv, c] : rows[pr].coef) c /= p;
            rows[pr].rhs /= p;
        }
        for (size_t r = 0; r < rows.size(); ++r) {
            if ((int)r == pr) continue;
            auto it = rows[r].coef.find(v);
            if (it == rows[r].coef.end() || it->second == 0) continue;
            Rat f = it->second;
            for (auto& [vv, c] : rows[pr].coef) {
                Rat& t = rows[r].coef[vv];
                t -= f * c;
                if (t == 0) rows[r].coef.erase(vv);
            }
            rows[r].rhs -= f * rows[pr].rhs;
        }
        pivots.push_back({v, pr});
    }
    for (size_t r = 0; r < rows.size(); ++r)
        if (rows[r].coef.empty() && rows[r].rhs != 0) return std::nullopt;
    std::map<int, Poly> subst;
    for (auto& [v, r] : pivots) {
        Poly expr = ps.constant(rows[r].rhs);
        for (auto& [vv, c] : rows[r].coef)
            if (vv != v) expr -= ps.tvar(vv) * c;
        subst[v] = expr;
    }
    return subst;
}

struct PolySystemSolver {
    const ParamSystem& ps;
    int max_depth = 8;

    explicit PolySystemSolver(const ParamSystem& p) : ps(p) {}

    // Returns a full assignment for all parameters, or nullopt.
    std::optional<std::vector<Rat>> solve(std::vector<Poly> eqs) const {
        std::map<int, Poly> resolved;
        if (!run(std::move(eqs), resolved, 0)) return std::nullopt;
        // remaining free parameters default to zero
        std::map<int, Poly> zeros;
        for (int i = 0; i < ps.nvars; ++i)
            if (!resolved.count(i)) zeros[i] = Poly(ps.tchart);
        std::vector<Rat> out(ps.nvars, 0);
        for (auto& [v, expr] : resolved) {
            Poly val = expr.substitute(zeros);
            // after zeroing frees the expr must be constant
            out[v] = val.coefficient(Monomial{});
        }
        return out;
    }

private:
    static void apply_subst(const std::map<int, Poly>& s,
                            std::vector<Poly>& eqs,
                            std::map<int, Poly>& resolved) {
        for (auto& [v, expr] : resolved) expr = expr.substitute(s);
        for (auto& [v, expr] : s) resolved[v] = expr;
        std::vector<Poly> next;
        for (Poly& e : eqs) {
            Poly r = e.substitute(s);
            if (!r.is_zero()) next.push_back(std::move(r));
        }
        eqs = std::move(next);
    }

    bool run(std::vector<Poly> eqs, std::map<int, Poly>& resolved,
             int depth) const {
        // iterate linear elimination to a fixed point
        for (int rounds = 0; rounds < 64; ++rounds) {
            std::vector<AffineRow> lin;
            std::vector<Poly> quad;
            for (Poly& e : eqs) {
                if (e.is_zero()) continue;
                if (linear_in_params(e)) lin.push_back(to_row(e));
                else quad.push_back(e);
            }
            if (lin.empty()) { eqs = std::move(quad); break; }
            auto subst = solve_affine(ps, std::move(lin));
            if (!subst) return false;
            eqs = std::move(quad);
            if (subst->empty()) break;
            apply_subst(*subst, eqs, resolved);
        }
        if (eqs.empty()) return true;
        if (depth >= max_depth) return false;

        // pick the quadratic equation with the fewest parameters
        auto count_vars = [](const Poly& e) {
            std::set<int> vs;
            for (const auto& [m, c] : e.terms())
                for (auto& [v, k] : m.f) vs.insert(v);
            return vs;
        };
        size_t best = 0;
        size_t best_n = SIZE_MAX;
        for (size_t i = 0; i < eqs.size(); ++i) {
            size_t n = count_vars(eqs[i]).size();
            if (n < best_n) { best_n = n; best = i; }
        }
        auto vars = count_vars(eqs[best]);

        // a variable occurring only linearly in that equation, with a
        // constant coefficient, can be solved for and substituted
        for (int v : vars) {
            Poly dv = eqs[best].dleft(v);
            bool lin_occurrence = true;
            for (const auto& [m, c] : eqs[best].terms())
                if (m.exponent(v) > 1) lin_occurrence = false;
            if (!lin_occurrence) continue;
            bool constant_coef = dv.n_terms() == 1 && dv.terms().begin()->first.empty();
            if (!constant_coef) continue;
            Rat a = dv.coefficient(Monomial{});
            std::map<int, Poly> zero_v{{v, Poly(ps.tchart)}};
            Poly rest = eqs[best].substitute(zero_v);
            std::map<int, Poly> s{{v, rest * (Rat(-1) / a)}};
            auto eqs2 = eqs;
            auto res2 = resolved;
            apply_subst(s, eqs2, res2);
            if (run(std::move(eqs2), res2, depth + 1)) {
                resolved = std::move(res2);
                return true;
            }
            return false; // exact substitution: failure is definitive here
        }

        // branch on a small value set
        int v = *vars.begin();
        for (const Rat& val : {Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2), Rat(2), Rat(-2)}) {
            std::map<int, Poly> s{{v, ps.constant(val)}};
            auto eqs2 = eqs;
            auto res2 = resolved;
            apply_subst(s, eqs2, res2);
            if (run(std::move(eqs2), res2, depth + 1)) {
                resolved = std::move(res2);
                return true;
            }
        }
        return false;
    }
};

int deg_cap_for(const Poly& S0, int max_res) {
    int d = 0;
    if (!S0.is_zero())
        for (const auto& [k, p] : S0.components(GradingName::Momentum))
            d = std::max(d, k);
    return std::max(3, d) + max_res;
}

std::vector<int> collect_degs(const Poly& p) {
    std::vector<int> out;
    for (const auto& [k, q] : p.components(GradingName::Momentum)) out.push_back(k);
    return out;
}

} // namespace

std::optional<std::vector<Rat>>
solve_poly_linear(const Poly& target, const std::vector<Poly>& columns,
                  std::vector<std::vector<Rat>>* nullsp) {
    MonomIndex rows;
    for (const auto& [m, c] : target.terms()) rows.intern(m);
    for (const Poly& col : columns)
        for (const auto& [m, c] : col.terms()) rows.intern(m);
    SparseMat A;
    A.resize(rows.size(), (int)columns.size());
    for (size_t j = 0; j < columns.size(); ++j)
        for (const auto& [m, c] : columns[j].terms())
            A.set(rows.find(m), (int)j, c);
    std::vector<Rat> b(rows.size(), 0);
    for (const auto& [m, c] : target.terms()) b[rows.find(m)] = -c;
    LinSolution sol = solve(A, b, nullsp != nullptr);
    if (!sol.consistent) return std::nullopt;
    if (nullsp) *nullsp = std::move(sol.nullspace);
    return sol.particular;
}

CompletionOutcome complete_master(const GaugeSystem& sys,
                                  const MasterFunction& S0, SolveBounds b) {
    CompletionOutcome out;
    const ChartPtr& chart = sys.chart();
    Poly S0v = S0.value;
    Poly phi0 = sys.odd.apply(S0v, S0v);
    if (phi0.is_zero()) {
        out.ok = true;
        out.S.value = S0v;
        out.S.exactly_verified = true;
        out.S.verified_res_bound = b.max_res;
        out.residual = Poly(chart);
        return out;
    }
    int degcap = deg_cap_for(S0v, b.max_res);
    for (int bd = 0; bd <= b.coeff_degree; ++bd) {
        Window w;
        w.ghost = 2;
        w.parity = 0;
        w.deg_min = 1;
        w.deg_max = degcap;
        w.res_min = 1;
        w.res_max = b.max_res;
        w.base_deg_max = bd;
        w.allow_velocity = false;
        auto basis = enumerate_basis(chart, w);
        if (basis.empty()) continue;
        int N = (int)basis.size();
        std::vector<Poly> e(N, Poly(chart));
        for (int i = 0; i < N; ++i) e[i].add_term(basis[i], 1);

        ParamSystem ps(N);
        // symbolic residual: keyed by residual monomial -> Poly in t
        std::map<Monomial, Poly> eqs;
        auto accum = [&](const Poly& val, const Poly& tfactor) {
            for (const auto& [m, c] : val.terms()) {
                auto it = eqs.find(m);
                if (it == eqs.end()) eqs.emplace(m, tfactor * c);
                else it->second += tfactor * c;
            }
        };
        accum(phi0, ps.constant(1));
        for (int i = 0; i < N; ++i)
            accum(sys.odd.apply(S0v, e[i]) * Rat(2), ps.tvar(i));
        for (int i = 0; i < N; ++i) {
            for (int j = i; j < N; ++j) {
                Poly br = sys.odd.apply(e[i], e[j]);
                if (br.is_zero()) continue;
                Rat f = (i == j) ? Rat(1) : Rat(2);
                accum(br * f, ps.tvar(i) * ps.tvar(j));
            }
        }
        std::vector<Poly> system;
        system.reserve(eqs.size());
        for (auto& [m, p] : eqs)
            if (!p.is_zero()) system.push_back(p);

        PolySystemSolver solver(ps);
        auto assignment = solver.solve(std::move(system));
        if (!assignment) continue;
        Poly X(chart);
        for (int i = 0; i < N; ++i)
            if ((*assignment)[i] != 0) X += e[i] * (*assignment)[i];
        Poly S = S0v + X;
        Poly res = sys.odd.apply(S, S);
        if (!res.is_zero()) continue; // cannot happen if the system was complete
        out.ok = true;
        out.S.value = S;
        out.S.exactly_verified = true;
        out.S.verified_res_bound = b.max_res;
        out.residual = res;
        return out;
    }
    out.ok = false;
    out.S.value = S0v;
    out.residual = phi0;
    out.message = "no solution at bound (max_res=" + std::to_string(b.max_res) +
                  ", coeff_degree=" + std::to_string(b.coeff_degree) +
                  "); residual reported";
    return out;
}

CompletionOutcome complete_dynamics(const GaugeSystem& sys, const Poly& V0,
                                    const MasterFunction& S, SolveBounds b) {
    CompletionOutcome out;
    const ChartPtr& chart = sys.chart();
    if (V0.is_zero()) {
        out.ok = true;
        out.S.value = V0;
        out.residual = Poly(chart);
        return out;
    }
    Poly target0 = sys.odd.apply(S.value, V0);
    if (target0.is_zero()) {
        out.ok = true;
        out.S.value = V0;
        out.residual = target0;
        return out;
    }
    int degcap = deg_cap_for(S.value, b.max_res);
    for (int bd = 0; bd <= b.coeff_degree; ++bd) {
        Window w;
        w.ghost = 1;
        w.parity = 1;
        w.deg_min = 1;
        w.deg_max = degcap;
        w.res_min = 1;
        w.res_max = b.max_res;
        w.base_deg_max = bd;
        auto basis = enumerate_basis(chart, w);
        if (basis.empty()) continue;
        std::vector<Poly> cols;
        cols.reserve(basis.size());
        for (const auto& m : basis) {
            Poly e(chart);
            e.add_term(m, 1);
            cols.push_back(sys.odd.apply(S.value, e));
        }
        auto x = solve_poly_linear(target0, cols);
        if (!x) continue;
        Poly V = V0;
        for (size_t i = 0; i < basis.size(); ++i)
            if ((*x)[i] != 0) {
                Poly e(chart);
                e.add_term(basis[i], 1);
                V += e * (*x)[i];
            }
        Poly res = sys.odd.apply(S.value, V);
        if (!res.is_zero()) continue;
        out.ok = true;
        out.S.value = V;
        out.residual = res;
        return out;
    }
    out.ok = false;
    out.S.value = V0;
    out.residual = target0;
    out.message = "no solution at bound";
    return out;
}

std::optional<MembershipCertificate>
ideal_membership(const GaugeSystem& sys, const Poly& U, int degree_bound) {
    const ChartPtr& chart = sys.chart();
    MembershipCertificate cert;
    cert.degree_bound = degree_bound;
    cert.a.assign(sys.spec.T.size(), Poly(chart));
    cert.b.assign(sys.spec.R.size(), Poly(chart));
    if (U.is_zero()) return cert;

    auto degs = collect_degs(U);
    int dmin = *std::min_element(degs.begin(), degs.end());
    int dmax = *std::max_element(degs.begin(), degs.end());

    Window wa;
    wa.allow_fibers = false;
    wa.deg_min = dmin;
    wa.deg_max = dmax;
    wa.res_max = 0;
    wa.base_deg_max = degree_bound;
    Window wb = wa;
    wb.deg_min = std::max(0, dmin - 1);
    wb.deg_max = std::max(0, dmax - 1);

    std::vector<Poly> cols;
    std::vector<std::pair<int, Monomial>> owner; // (slot, witness monomial)
    auto a_basis = enumerate_basis(chart, wa);
    auto b_basis = (dmax >= 1) ? enumerate_basis(chart, wb)
                               : std::vector<Monomial>{};
    for (size_t i = 0; i < sys.spec.T.size(); ++i)
        for (const auto& m : a_basis) {
            Poly e(chart);
            e.add_term(m, 1);
            Poly col = e * sys.spec.T[i];
            if (col.is_zero()) continue;
            cols.push_back(col);
            owner.push_back({(int)i, m});
        }
    int b_slot0 = (int)sys.spec.T.size();
    for (size_t j = 0; j < sys.spec.R.size(); ++j)
        for (const auto& m : b_basis) {
            Poly e(chart);
            e.add_term(m, 1);
            Poly col = e * sys.spec.R[j];
            if (col.is_zero()) continue;
            cols.push_back(col);
            owner.push_back({b_slot0 + (int)j, m});
        }
    if (cols.empty()) return std::nullopt;
    auto x = solve_poly_linear(-U, cols); // sum x_i col_i = U
    if (!x) return std::nullopt;
    for (size_t k = 0; k < cols.size(); ++k) {
        if ((*x)[k] == 0) continue;
        Poly e(chart);
        e.add_term(owner[k].second, (*x)[k]);
        if (owner[k].first < b_slot0) cert.a[owner[k].first] += e;
        else cert.b[owner[k].first - b_slot0] += e;
    }
    // reconstruction invariant
    Poly back(chart);
    for (size_t i = 0; i < sys.spec.T.size(); ++i) back += cert.a[i] * sys.spec.T[i];
    for (size_t j = 0; j < sys.spec.R.size(); ++j) back += cert.b[j] * sys.spec.R[j];
    if (!(back == U)) throw std::logic_error("membership certificate failed to verify");
    return cert;
}

ProjectibilityReport check_projectible(const GaugeSystem& sys, const Poly& U,
                                       int degree_bound,
                                       const MasterFunction* S, int res_cap) {
    ProjectibilityReport rep;
    const ChartPtr& chart = sys.chart();
    bool all = true, any_fail = false;
    auto add_item = [&](const std::string& name, const Poly& gen) {
        ProjectibilityItem item;
        item.generator = name;
        item.bracket = sys.odd.apply(U, gen);
        if (item.bracket.is_zero()) {
            item.in_ideal = true;
            item.cert = MembershipCertificate{
                std::vector<Poly>(sys.spec.T.size(), Poly(chart)),
                std::vector<Poly>(sys.spec.R.size(), Poly(chart)), degree_bound};
        } else {
            item.cert = ideal_membership(sys, item.bracket, degree_bound);
            item.in_ideal = item.cert.has_value();
        }
        all = all && item.in_ideal;
        any_fail = any_fail || !item.in_ideal;
        rep.items.push_back(std::move(item));
    };
    for (size_t i = 0; i < sys.spec.T.size(); ++i)
        add_item("T" + std::to_string(i + 1), sys.spec.T[i]);
    for (size_t j = 0; j < sys.spec.R.size(); ++j)
        add_item("R" + std::to_string(j + 1), sys.spec.R[j]);
    rep.projectible = all;
    rep.inconclusive = any_fail;

    if (S && !U.is_zero()) {
        Poly S1 = S->momentum_part(1);
        Derivation Q = extract_Q_full(sys, S1);
        auto degs = collect_degs(U);
        Window w;
        w.deg_min = *std::min_element(degs.begin(), degs.end());
        w.deg_max = *std::max_element(degs.begin(), degs.end());
        w.res_min = 1;
        w.res_max = res_cap;
        w.base_deg_max = degree_bound + std::max(0, Q.base_degree_growth()) * res_cap;
        auto all_monoms = enumerate_basis(chart, w);
        // extension terms carry ghost degree equal to their momentum degree,
        // like the multivector they extend
        std::vector<Monomial> basis;
        Poly probe(chart);
        for (const auto& m : all_monoms) {
            Poly e(chart);
            e.add_term(m, 1);
            if (e.grading_of(GradingName::Ghost) ==
                e.grading_of(GradingName::Momentum))
                basis.push_back(m);
        }
        int freedom = 0;
        auto ext = extend_to_cocycle(Q, U, basis, &freedom);
        rep.cocycle_route = ext.has_value();
        if (ext) rep.extension_freedom = freedom;
    }
    return rep;
}

std::optional<Poly> extend_to_cocycle(const Derivation& D, const Poly& U,
                                      const std::vector<Monomial>& basis,
                                      int* freedom) {
    const ChartPtr& chart = D.chart();
    Poly target = D.apply(U);
    if (target.is_zero()) {
        if (freedom) *freedom = 0;
        return Poly(chart);
    }
    std::vector<Poly> cols;
    cols.reserve(basis.size());
    for (const auto& m : basis) {
        Poly e(chart);
        e.add_term(m, 1);
        cols.push_back(D.apply(e));
    }
    std::vector<std::vector<Rat>> null;
    auto x = solve_poly_linear(target, cols, freedom ? &null : nullptr);
    if (!x) return std::nullopt;
    if (freedom) *freedom = (int)null.size();
    Poly X(chart);
    for (size_t i = 0; i < basis.size(); ++i)
        if ((*x)[i] != 0) {
            Poly e(chart);
            e.add_term(basis[i], 1);
            X += e * (*x)[i];
        }
    return X;
}

} // namespace gsys
