#ifndef GSYS_BRACKET_HPP
#define GSYS_BRACKET_HPP

#include <map>

#include "gsys/poly.hpp"

namespace gsys {

// Connection coefficients A^B_{Ai} for the eta and c fiber sectors, as
// base polynomials keyed by (out fiber index, in fiber index, base coord id).
// Fiber indices count the sector's variables in chart order, from 0.
// Curvature entries are always computed from these, never supplied.
struct ConnectionData {
    std::map<std::tuple<int, int, int>, Poly> eta; // A^a_{b i}
    std::map<std::tuple<int, int, int>, Poly> c;   // A^alpha_{beta i}
    bool empty() const { return eta.empty() && c.empty(); }
};

// Fundamental brackets between generator pairs, extended to a biderivation
// by the graded Leibniz rule:
//   {F,G} = sum_(u,v) dR_u(F) * B(u,v) * dL_v(G).
// Entries are stored directed; the transpose carries the graded
// antisymmetry sign -(-1)^{(eps u + s)(eps v + s)} with s the parity shift.
class BracketTable {
public:
    BracketTable(ChartPtr chart, int parity_shift, int ghost_shift);

    void set(int u, int v, const Poly& value); // also installs the transpose
    const Poly* entry(int u, int v) const;     // nullptr when zero

    Poly apply(const Poly& F, const Poly& G) const;

    int parity_shift() const { return shift_; }
    int ghost_shift() const { return ghost_shift_; }
    const ChartPtr& chart() const { return chart_; }

    // Checks the grading invariant on every entry: gradings of the entry
    // equal the sum of the pair's gradings plus the shifts.
    void check_entry_gradings() const;

private:
    ChartPtr chart_;
    int shift_;
    int ghost_shift_;
    std::map<std::pair<int, int>, Poly> entries_;
};

// The canonical odd Poisson bracket table on the N-level variables
// (momentum/coordinate pairings +1), twisted by a connection when given:
//   (xs_i, eta^a) =  eta^b A^a_{b i}
//   (xs_i, c^al)  =  c^be A^al_{be i}
//   (xs_i, etas_a) = -A^b_{a i} etas_b
//   (xs_i, cs_al)  = -A^be_{al i} cs_be
//   (xs_i, xs_j)  =  curvature row computed from A.
// The sign of the dual-fiber rows and the curvature are fixed by the graded
// Jacobi identity, which the property suite verifies.
BracketTable odd_table(const ChartPtr& chart,
                       const ConnectionData* conn = nullptr);

// The even non-degenerate bracket of ghost degree 0 on PiT(N):
//   {dphis_A, phi^B} = delta_A^B,   {dphi^A, phis_B} = -delta^A_B.
BracketTable even_table(const ChartPtr& chart);

// Delta = sum_A (-1)^{eps(phi^A)} dphi^A dphis_A.
Poly delta_element(const ChartPtr& chart);

// Restrictions: phi* -> 0 (to M) and phi*, dphi* -> 0 (to L).
Poly restrict_to_M(const Poly& F);
Poly restrict_to_L(const Poly& F);

// Requires both arguments to live in the (x, xs) subchart; equals the odd
// bracket there.
Poly schouten(const BracketTable& odd, const Poly& U, const Poly& W);

// Multivector encoding of a wedge product: enc(U ^ W) = enc(W) * enc(U).
Poly wedge(const Poly& U, const Poly& W);

// Psi = {Delta, F} for the even bracket.
Poly lift_by_delta(const BracketTable& even, const Poly& F);

enum class Restriction { ToM, ToL };

// Nested bracket ( ... (gen, a1), ..., ak ) with the odd bracket for ToM and
// the even bracket for ToL, restricted once at the end.
Poly derived_bracket(const BracketTable& table, const Poly& generator,
                     const std::vector<Poly>& args, Restriction r);

} // namespace gsys

#endif
