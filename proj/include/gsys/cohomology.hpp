#ifndef GSYS_COHOMOLOGY_HPP
#define GSYS_COHOMOLOGY_HPP

#include <optional>

#include "gsys/basis.hpp"
#include "gsys/derivation.hpp"
#include "gsys/linalg.hpp"

namespace gsys {

// A finite bigraded window: ghost degree l, weight k (momentum degree on the
// N-level complex, form degree on the Lagrangian complex), base-coordinate
// degree cap and resolution cap. Basis enumeration is deterministic.
struct Truncation {
    int base_poly_degree = 2;
    int ghost = 0;
    int weight = 0;
    int res_cap = 3;
    bool form_mode = false; // weight = form degree on the L-chart
};

struct TruncBasis {
    std::vector<Monomial> monomials;
    MonomIndex index;
};

TruncBasis truncation_basis(const ChartPtr& chart, const Truncation& t);

// The uniform ghost shift of a graded derivation; throws when D is not
// ghost-homogeneous.
int ghost_shift(const Derivation& D);

// Matrix of D from the truncation basis into the enlarged target basis
// (ghost moves by the shift of D; base window grows by D's coefficient
// degree; resolution cap grows by D's largest resolution raise). A produced
// monomial outside the computed target reports unbounded growth.
SparseMat operator_matrix(const Derivation& D, const Truncation& src,
                          TruncBasis* src_basis = nullptr,
                          TruncBasis* tgt_basis = nullptr);

struct CohomologyReport {
    int dim_source = 0;
    int dim_kernel = 0;
    int rank_out = 0;      // rank of D at (k,l)
    int rank_in = 0;       // rank of the incoming image intersected with the window
    int dim_H = 0;
    std::vector<Poly> representatives;
    // set when the truncation can only confirm, not refute (k > l queries):
    // a nonzero dimension there means "bound too small", not a contradiction
    bool k_gt_l = false;
};

CohomologyReport cohomology_at(const Derivation& D, const Truncation& t);

// Exact preimage D G = F within the truncation, or nullopt (inconclusive at
// the bound). Throws when F is not closed.
std::optional<Poly> coboundary_preimage(const Derivation& D, const Poly& F,
                                        const Truncation& t);

} // namespace gsys

#endif
