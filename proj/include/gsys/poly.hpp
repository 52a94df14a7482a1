#ifndef GSYS_POLY_HPP
#define GSYS_POLY_HPP

#include <map>
#include <optional>
#include <vector>

#include "gsys/chart.hpp"
#include "gsys/rational.hpp"

namespace gsys {

// Factors sorted by variable id (the chart's canonical order). Odd variables
// carry exponent <= 1; zero exponents never stored.
struct Monomial {
    std::vector<std::pair<int, int>> f; // (var id, exponent)

    bool operator==(const Monomial& o) const { return f == o.f; }
    bool operator<(const Monomial& o) const { return f < o.f; }
    bool contains(int var) const;
    int exponent(int var) const;
    bool empty() const { return f.empty(); }
};

enum class GradingName { Parity, Ghost, Momentum, Resolution, Form };

// Exact-coefficient polynomial in the graded variables of one chart,
// kept in canonical normal form (Koszul-sign-sorted monomials).
class Poly {
public:
    Poly() = default;
    explicit Poly(ChartPtr chart) : chart_(std::move(chart)) {}
    Poly(ChartPtr chart, const Rat& c);

    static Poly var(const ChartPtr& chart, int id);
    static Poly var(const ChartPtr& chart, const std::string& name);
    // Product of the named generators in the written order, times coeff.
    // Reordering into canonical form tracks odd transposition signs.
    static Poly word(const ChartPtr& chart, const Rat& coeff,
                     const std::vector<int>& ids);

    const ChartPtr& chart() const { return chart_; }
    bool is_zero() const { return terms_.empty(); }
    int n_terms() const { return (int)terms_.size(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    bool operator==(const Poly& o) const;

    Poly pow(int e) const;

    // Graded left derivative with respect to variable v.
    Poly dleft(int v) const;
    // Right derivative, obtained by the sign rule
    // dR_v F = (-1)^{eps(v)(eps(F)+1)} dL_v F applied per monomial.
    Poly dright(int v) const;

    // Parallel substitution; each replacement must match the parity of the
    // variable it replaces.
    Poly substitute(const std::map<int, Poly>& repl) const;
    // Sets to zero every variable selected by the predicate.
    template <class Pred> Poly restrict_zero(Pred&& kill) const {
        Poly r(chart_);
        for (const auto& [m, c] : terms_) {
            bool dead = false;
            for (auto& [v, e] : m.f)
                if (kill(v)) { dead = true; break; }
            if (!dead) r.terms_[m] = c;
        }
        return r;
    }

    // Total grading of a homogeneous polynomial; throws on inhomogeneous
    // input or when the grading is undefined for a contained variable.
    int grading_of(GradingName which) const;
    bool is_homogeneous(GradingName which) const;
    // Grading of one monomial (throws if undefined for a variable).
    int monomial_grading(const Monomial& m, GradingName which) const;

    // Splits into homogeneous components of the given grading.
    std::map<int, Poly> components(GradingName which) const;

    // Largest total degree in Base-kind variables over all monomials (0 for 0).
    int base_degree() const;

    // Coefficient of an exact monomial (0 if absent).
    Rat coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Rat& c);

    std::string str() const;

private:
    ChartPtr chart_;
    std::map<Monomial, Rat> terms_;
};

// Per-monomial helpers used across the engine.
int monomial_parity(const Chart& chart, const Monomial& m);
std::string monomial_str(const Chart& chart, const Monomial& m);

} // namespace gsys

#endif
