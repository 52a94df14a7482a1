#include "gsys/bracket.hpp"

#include <stdexcept>

namespace gsys {

BracketTable::BracketTable(ChartPtr chart, int parity_shift, int ghost_shift)
    : chart_(std::move(chart)), shift_(parity_shift & 1), ghost_shift_(ghost_shift) {}

void BracketTable::set(int u, int v, const Poly& value) {
    if (value.is_zero()) {
        entries_.erase({u, v});
        if (u != v) entries_.erase({v, u});
        return;
    }
    entries_[{u, v}] = value;
    if (u == v) return;
    // B(v,u) = -(-1)^{(eps u + s)(eps v + s)} B(u,v)
    int eu = chart_->var(u).g.parity, ev = chart_->var(v).g.parity;
    bool flip_twice = ((eu + shift_) & 1) && ((ev + shift_) & 1);
    entries_[{v, u}] = flip_twice ? value : -value;
}

const Poly* BracketTable::entry(int u, int v) const {
    auto it = entries_.find({u, v});
    return it == entries_.end() ? nullptr : &it->second;
}

Poly BracketTable::apply(const Poly& F, const Poly& G) const {
    Poly out(chart_);
    // collect used variables on both sides to skip dead table entries
    std::vector<char> inF(chart_->size(), 0), inG(chart_->size(), 0);
    for (const auto& [m, c] : F.terms())
        for (auto& [v, e] : m.f) inF[v] = 1;
    for (const auto& [m, c] : G.terms())
        for (auto& [v, e] : m.f) inG[v] = 1;
    for (const auto& [uv, B] : entries_) {
        auto [u, v] = uv;
        if (!inF[u] || !inG[v]) continue;
        out += F.dright(u) * B * G.dleft(v);
    }
    return out;
}

void BracketTable::check_entry_gradings() const {
    for (const auto& [uv, B] : entries_) {
        auto [u, v] = uv;
        const Grading& gu = chart_->var(u).g;
        const Grading& gv = chart_->var(v).g;
        if (B.grading_of(GradingName::Parity) !=
            ((gu.parity + gv.parity + shift_) & 1))
            throw std::logic_error("bracket table entry parity mismatch");
        if (B.grading_of(GradingName::Ghost) != gu.ghost + gv.ghost + ghost_shift_)
            throw std::logic_error("bracket table entry ghost mismatch");
    }
}

namespace {

// Fiber variables of one sector (eta or c), in chart order.
std::vector<int> sector_fibers(const Chart& ch, Sector s, VarKind kind) {
    std::vector<int> out;
    for (int i = 0; i < ch.size(); ++i)
        if (ch.var(i).sector == s && ch.var(i).kind == kind) out.push_back(i);
    return out;
}

std::vector<int> base_vars(const Chart& ch) {
    std::vector<int> out;
    for (int i = 0; i < ch.size(); ++i)
        if (ch.var(i).kind == VarKind::Base) out.push_back(i);
    return out;
}

const Poly* conn_entry(const std::map<std::tuple<int, int, int>, Poly>& m,
                       int out, int in, int base) {
    auto it = m.find({out, in, base});
    return it == m.end() ? nullptr : &it->second;
}

} // namespace

BracketTable odd_table(const ChartPtr& chart, const ConnectionData* conn) {
    const Chart& ch = *chart;
    BracketTable T(chart, 1, -1);
    Poly one(chart, 1);
    for (int i = 0; i < ch.size(); ++i) {
        const VarInfo& v = ch.var(i);
        if (v.kind != VarKind::Momentum) continue;
        T.set(i, v.partner, one); // (phi*_A, phi^A) = 1
    }
    if (!conn || conn->empty()) return T;

    auto bases = base_vars(ch);
    auto etas = sector_fibers(ch, Sector::Eta, VarKind::AntighostFiber);
    auto cs = sector_fibers(ch, Sector::C, VarKind::GhostFiber);

    auto fiber_rows = [&](const std::vector<int>& fibers,
                          const std::map<std::tuple<int, int, int>, Poly>& A) {
        int n = (int)fibers.size();
        for (size_t bi = 0; bi < bases.size(); ++bi) {
            int xsi = ch.momentum_of(bases[bi]);
            // (xs_i, z^B) = z^C A^B_{C i}
            for (int B = 0; B < n; ++B) {
                Poly entry(chart);
                for (int C = 0; C < n; ++C)
                    if (const Poly* a = conn_entry(A, B, C, (int)bi))
                        entry += Poly::var(chart, fibers[C]) * *a;
                if (!entry.is_zero()) {
                    Poly prev = T.entry(xsi, fibers[B]) ? *T.entry(xsi, fibers[B])
                                                        : Poly(chart);
                    T.set(xsi, fibers[B], prev + entry);
                }
            }
            // (xs_i, z*_B) = -A^C_{B i} z*_C
            for (int B = 0; B < n; ++B) {
                Poly entry(chart);
                for (int C = 0; C < n; ++C)
                    if (const Poly* a = conn_entry(A, C, B, (int)bi))
                        entry -= *a * Poly::var(chart, ch.momentum_of(fibers[C]));
                if (!entry.is_zero()) {
                    int zsB = ch.momentum_of(fibers[B]);
                    Poly prev = T.entry(xsi, zsB) ? *T.entry(xsi, zsB) : Poly(chart);
                    T.set(xsi, zsB, prev + entry);
                }
            }
        }
        return;
    };
    fiber_rows(etas, conn->eta);
    fiber_rows(cs, conn->c);

    // curvature row:
    //   (xs_i, xs_j) = sum over sectors z of
    //       z^C R^B_{C i j} z*_B,
    //   R^B_{C i j} = d_i A^B_{C j} - d_j A^B_{C i}
    //                 + A^D_{C i} A^B_{D j} - A^D_{C j} A^B_{D i}.
    auto curvature = [&](const std::vector<int>& fibers,
                         const std::map<std::tuple<int, int, int>, Poly>& A,
                         int bi, int bj) {
        int n = (int)fibers.size();
        Poly total(chart);
        for (int B = 0; B < n; ++B) {
            for (int C = 0; C < n; ++C) {
                Poly R(chart);
                if (const Poly* a = conn_entry(A, B, C, bj)) R += a->dleft(bases[bi]);
                if (const Poly* a = conn_entry(A, B, C, bi)) R -= a->dleft(bases[bj]);
                for (int D = 0; D < n; ++D) {
                    const Poly* a1 = conn_entry(A, D, C, bi);
                    const Poly* a2 = conn_entry(A, B, D, bj);
                    if (a1 && a2) R += *a1 * *a2;
                    a1 = conn_entry(A, D, C, bj);
                    a2 = conn_entry(A, B, D, bi);
                    if (a1 && a2) R -= *a1 * *a2;
                }
                if (!R.is_zero())
                    total += Poly::var(chart, fibers[C]) * R *
                             Poly::var(chart, ch.momentum_of(fibers[B]));
            }
        }
        return total;
    };
    for (size_t bi = 0; bi < bases.size(); ++bi) {
        for (size_t bj = bi + 1; bj < bases.size(); ++bj) {
            Poly entry = curvature(etas, conn->eta, (int)bi, (int)bj) +
                         curvature(cs, conn->c, (int)bi, (int)bj);
            if (!entry.is_zero())
                T.set(ch.momentum_of(bases[bi]), ch.momentum_of(bases[bj]), entry);
        }
    }
    return T;
}

BracketTable even_table(const ChartPtr& chart) {
    const Chart& ch = *chart;
    BracketTable T(chart, 0, 0);
    Poly one(chart, 1);
    for (int i = 0; i < ch.size(); ++i) {
        const VarInfo& v = ch.var(i);
        if (v.kind == VarKind::VelocityMomentum) {
            // {dphis_A, phi^A} = +1  (partner of dphis is phis; its partner is phi)
            int phis = v.partner;
            int phi = ch.var(phis).partner;
            T.set(i, phi, one);
        } else if (v.kind == VarKind::Velocity) {
            // {dphi^A, phis_A} = -1
            int phi = v.partner;
            int phis = ch.momentum_of(phi);
            if (phis >= 0) T.set(i, phis, -one);
        }
    }
    return T;
}

Poly delta_element(const ChartPtr& chart) {
    const Chart& ch = *chart;
    Poly d(chart);
    for (int i = 0; i < ch.size(); ++i) {
        const VarInfo& v = ch.var(i);
        if (v.kind != VarKind::Velocity) continue;
        int phi = v.partner;
        int phis = ch.momentum_of(phi);
        if (phis < 0) continue;
        int dphis = ch.velocity_of(phis);
        if (dphis < 0) continue;
        Rat sgn = ch.var(phi).g.parity ? -1 : 1;
        d += Poly::word(chart, sgn, {i, dphis});
    }
    return d;
}

Poly restrict_to_M(const Poly& F) {
    const Chart& ch = *F.chart();
    return F.restrict_zero([&](int v) {
        VarKind k = ch.var(v).kind;
        return k == VarKind::Momentum || k == VarKind::VelocityMomentum;
    });
}

Poly restrict_to_L(const Poly& F) { return restrict_to_M(F); }

Poly schouten(const BracketTable& odd, const Poly& U, const Poly& W) {
    const Chart& ch = *odd.chart();
    auto check = [&](const Poly& P) {
        for (const auto& [m, c] : P.terms())
            for (auto& [v, e] : m.f) {
                const VarInfo& vi = ch.var(v);
                bool ok = (vi.kind == VarKind::Base && vi.sector == Sector::X) ||
                          (vi.kind == VarKind::Momentum && vi.sector == Sector::X);
                if (!ok)
                    throw std::invalid_argument(
                        "schouten: argument leaves the multivector subchart (" +
                        vi.name + ")");
            }
    };
    check(U);
    check(W);
    return odd.apply(U, W);
}

Poly wedge(const Poly& U, const Poly& W) { return W * U; }

Poly lift_by_delta(const BracketTable& even, const Poly& F) {
    return even.apply(delta_element(even.chart()), F);
}

Poly derived_bracket(const BracketTable& table, const Poly& generator,
                     const std::vector<Poly>& args, Restriction r) {
    if (args.empty())
        throw std::invalid_argument("derived_bracket: empty argument list");
    Poly acc = generator;
    for (const Poly& a : args) acc = table.apply(acc, a);
    return r == Restriction::ToM ? restrict_to_M(acc) : restrict_to_L(acc);
}

} // namespace gsys
