#include "gsys/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace gsys {

bool Monomial::contains(int var) const {
    for (auto& [v, e] : f)
        if (v == var) return true;
    return false;
}

int Monomial::exponent(int var) const {
    for (auto& [v, e] : f)
        if (v == var) return e;
    return 0;
}

int monomial_parity(const Chart& chart, const Monomial& m) {
    int p = 0;
    for (auto& [v, e] : m.f) p += chart.var(v).g.parity * e;
    return p & 1;
}

Poly::Poly(ChartPtr chart, const Rat& c) : chart_(std::move(chart)) {
    if (c != 0) terms_[Monomial{}] = c;
}

Poly Poly::var(const ChartPtr& chart, int id) {
    if (id < 0 || id >= chart->size())
        throw std::invalid_argument("variable id out of range");
    Poly p(chart);
    p.terms_[Monomial{{{id, 1}}}] = 1;
    return p;
}

Poly Poly::var(const ChartPtr& chart, const std::string& name) {
    return var(chart, chart->require(name));
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

// Merges monomials; sign receives +1/-1, or 0 when an odd square appears.
Monomial merge_monomials(const Chart& chart, const Monomial& a,
                         const Monomial& b, int& sign) {
    sign = 1;
    Monomial out;
    out.f.reserve(a.f.size() + b.f.size());
    size_t i = 0, j = 0;
    // odd factors of a not yet passed, counted from the right as we sweep.
    // For each odd factor of b we must move it left past every odd factor of
    // a that is still to the right of the insertion point.
    int odd_remaining_a = 0;
    for (auto& [v, e] : a.f)
        if (chart.var(v).g.parity && (e & 1)) ++odd_remaining_a;
    while (i < a.f.size() || j < b.f.size()) {
        if (j == b.f.size() || (i < a.f.size() && a.f[i].first < b.f[j].first)) {
            if (chart.var(a.f[i].first).g.parity && (a.f[i].second & 1))
                --odd_remaining_a;
            out.f.push_back(a.f[i]);
            ++i;
        } else if (i == a.f.size() || b.f[j].first < a.f[i].first) {
            bool odd = chart.var(b.f[j].first).g.parity != 0;
            if (odd) {
                if (b.f[j].second > 1) { sign = 0; return {}; }
                if (odd_remaining_a & 1) sign = -sign;
            }
            out.f.push_back(b.f[j]);
            ++j;
        } else { // same variable
            bool odd = chart.var(a.f[i].first).g.parity != 0;
            if (odd) { sign = 0; return {}; } // odd square
            out.f.push_back({a.f[i].first, a.f[i].second + b.f[j].second});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!chart_) chart_ = o.chart_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!chart_) chart_ = o.chart_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r(chart_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(chart_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(chart_ ? chart_ : o.chart_);
    if (!r.chart_) return r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            int sign;
            Monomial m = merge_monomials(*r.chart_, ma, mb, sign);
            if (sign == 0) continue;
            r.add_term(m, ca * cb * sign);
        }
    }
    return r;
}

bool Poly::operator==(const Poly& o) const { return terms_ == o.terms_; }

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Poly r(chart_, 1);
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
}

Poly Poly::word(const ChartPtr& chart, const Rat& coeff,
                const std::vector<int>& ids) {
    Poly r(chart, coeff);
    for (int id : ids) r = r * var(chart, id);
    return r;
}

Poly Poly::dleft(int v) const {
    Poly r(chart_);
    const Chart& ch = *chart_;
    bool v_odd = ch.var(v).g.parity != 0;
    for (const auto& [m, c] : terms_) {
        int idx = -1;
        for (size_t k = 0; k < m.f.size(); ++k)
            if (m.f[k].first == v) { idx = (int)k; break; }
        if (idx < 0) continue;
        Monomial out;
        Rat coeff = c;
        if (v_odd) {
            int before = 0;
            for (int k = 0; k < idx; ++k)
                if (ch.var(m.f[k].first).g.parity && (m.f[k].second & 1)) ++before;
            if (before & 1) coeff = -coeff;
            out = m;
            out.f.erase(out.f.begin() + idx);
        } else {
            out = m;
            coeff *= m.f[idx].second;
            if (--out.f[idx].second == 0) out.f.erase(out.f.begin() + idx);
        }
        r.add_term(out, coeff);
    }
    return r;
}

Poly Poly::dright(int v) const {
    const Chart& ch = *chart_;
    if (!ch.var(v).g.parity) return dleft(v);
    // per-monomial sign (-1)^{eps(v)(eps(m)+1)} applied to the left derivative
    Poly r(chart_);
    for (const auto& [m, c] : terms_) {
        Poly single(chart_);
        single.terms_[m] = c;
        Poly d = single.dleft(v);
        int sgn = ((monomial_parity(ch, m) + 1) & 1) ? -1 : 1;
        if (sgn < 0) d = -d;
        r += d;
    }
    return r;
}

Poly Poly::substitute(const std::map<int, Poly>& repl) const {
    const Chart& ch = *chart_;
    for (const auto& [v, p] : repl) {
        if (!p.is_zero() && p.is_homogeneous(GradingName::Parity) &&
            p.grading_of(GradingName::Parity) != ch.var(v).g.parity)
            throw std::invalid_argument("substitute: parity mismatch for " +
                                        ch.var(v).name);
        if (!p.is_zero() && !p.is_homogeneous(GradingName::Parity))
            throw std::invalid_argument("substitute: inhomogeneous replacement");
    }
    Poly r(chart_);
    for (const auto& [m, c] : terms_) {
        Poly acc(chart_, c);
        for (auto& [v, e] : m.f) {
            auto it = repl.find(v);
            Poly factor = (it == repl.end()) ? var(chart_, v) : it->second;
            acc = acc * factor.pow(e);
            if (acc.is_zero()) break;
        }
        r += acc;
    }
    return r;
}

int Poly::monomial_grading(const Monomial& m, GradingName which) const {
    const Chart& ch = *chart_;
    long total = 0;
    for (auto& [v, e] : m.f) {
        const Grading& g = ch.var(v).g;
        switch (which) {
        case GradingName::Parity: total += g.parity * e; break;
        case GradingName::Ghost: total += g.ghost * e; break;
        case GradingName::Form: total += g.form * e; break;
        case GradingName::Momentum:
            if (!g.momentum)
                throw std::domain_error("momentum degree undefined for " +
                                        ch.var(v).name);
            total += *g.momentum * e;
            break;
        case GradingName::Resolution:
            if (!g.resolution)
                throw std::domain_error("resolution degree undefined for " +
                                        ch.var(v).name);
            total += *g.resolution * e;
            break;
        }
    }
    if (which == GradingName::Parity) total &= 1;
    return (int)total;
}

bool Poly::is_homogeneous(GradingName which) const {
    if (terms_.empty()) return true;
    bool first = true;
    int val = 0;
    for (const auto& [m, c] : terms_) {
        int g = monomial_grading(m, which);
        if (first) { val = g; first = false; }
        else if (g != val) return false;
    }
    return true;
}

int Poly::grading_of(GradingName which) const {
    if (terms_.empty())
        throw std::domain_error("grading of the zero polynomial is undefined");
    bool first = true;
    int val = 0;
    for (const auto& [m, c] : terms_) {
        int g = monomial_grading(m, which);
        if (first) { val = g; first = false; }
        else if (g != val) throw std::domain_error("inhomogeneous polynomial");
    }
    return val;
}

std::map<int, Poly> Poly::components(GradingName which) const {
    std::map<int, Poly> out;
    for (const auto& [m, c] : terms_) {
        int g = monomial_grading(m, which);
        auto it = out.find(g);
        if (it == out.end()) {
            Poly p(chart_);
            p.terms_[m] = c;
            out.emplace(g, std::move(p));
        } else {
            it->second.terms_[m] = c;
        }
    }
    return out;
}

int Poly::base_degree() const {
    int best = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (auto& [v, e] : m.f)
            if (chart_->var(v).kind == VarKind::Base) d += e;
        best = std::max(best, d);
    }
    return best;
}

Rat Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::string monomial_str(const Chart& chart, const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (auto& [v, e] : m.f) {
        if (!first) os << "*";
        os << chart.var(v).name;
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string ms = monomial_str(*chart_, m);
        if (ms.empty()) os << rat_str(a);
        else if (a == 1) os << ms;
        else os << rat_str(a) << "*" << ms;
        first = false;
    }
    return os.str();
}

} // namespace gsys
