#ifndef GSYS_REPORT_HPP
#define GSYS_REPORT_HPP

#include <json.hpp>

#include "gsys/cohomology.hpp"
#include "gsys/dsl.hpp"
#include "gsys/master.hpp"

namespace gsys {

using Json = nlohmann::ordered_json;

// Residual polynomials print in canonical monomial order; rationals as "p/q".
Json poly_json(const Poly& p);
Json cert_json(const GaugeSystem& sys, const MembershipCertificate& c);
Json master_report_json(const MasterReport& rep);
Json projectibility_json(const ProjectibilityReport& rep);
Json cohomology_json(const CohomologyReport& rep);

// Fixed description of the bracket sign conventions the engine is pinned to;
// attached to lift reports so the chosen resolutions stay visible.
Json sign_conventions_json();

std::string dump_report(const Json& j);

// -------- verification driver shared by the CLI and the tests --------

struct VerifyOutcome {
    Json report;
    bool all_passed = true;
    bool inconclusive = false;
};

// Runs the standard battery on an elaborated system: commutation-relation
// witnesses (or certificates), weak Jacobi of P with certificates,
// projectibility of P and V, and the master check of any provided S.
VerifyOutcome verify_system(const ElaboratedSystem& es);

} // namespace gsys

#endif
