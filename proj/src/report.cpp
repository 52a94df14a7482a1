#include "gsys/report.hpp"

namespace gsys {

Json poly_json(const Poly& p) { return p.str(); }

Json cert_json(const GaugeSystem& sys, const MembershipCertificate& c) {
    Json j;
    j["degree_bound"] = c.degree_bound;
    Json wa = Json::array();
    for (size_t i = 0; i < c.a.size(); ++i) {
        Json e;
        e["constraint"] = "T" + std::to_string(i + 1);
        e["coefficient"] = c.a[i].str();
        wa.push_back(e);
    }
    Json wb = Json::array();
    for (size_t i = 0; i < c.b.size(); ++i) {
        Json e;
        e["generator"] = "R" + std::to_string(i + 1);
        e["coefficient"] = c.b[i].str();
        wb.push_back(e);
    }
    j["constraint_witnesses"] = wa;
    j["generator_witnesses"] = wb;
    (void)sys;
    return j;
}

Json master_report_json(const MasterReport& rep) {
    Json j;
    j["check"] = "master";
    j["residual"] = rep.residual.str();
    j["pass"] = rep.ok;
    Json g = Json::array();
    for (const auto& [key, p] : rep.graded) {
        Json e;
        e["momentum_degree"] = key.first;
        e["resolution_degree"] = key.second;
        e["value"] = p.str();
        g.push_back(e);
    }
    j["residual_by_degree"] = g;
    j["QQ"] = rep.QQ.str();
    j["QPi"] = rep.QPi.str();
    j["PiPi_plus_2QXi"] = rep.PiPi_2QXi.str();
    return j;
}

Json projectibility_json(const ProjectibilityReport& rep) {
    Json j;
    j["check"] = "projectible";
    j["verdict"] = rep.projectible
                       ? "projectible"
                       : (rep.inconclusive ? "inconclusive" : "projectible");
    Json items = Json::array();
    for (const auto& it : rep.items) {
        Json e;
        e["generator"] = it.generator;
        e["bracket"] = it.bracket.str();
        e["in_ideal"] = it.in_ideal;
        if (it.cert) e["certificate"] = Json::object(); // filled by callers with sys
        items.push_back(e);
    }
    j["items"] = items;
    if (rep.cocycle_route) {
        j["cocycle_route"] = *rep.cocycle_route;
        if (rep.extension_freedom)
            j["extension_freedom"] = *rep.extension_freedom;
    }
    return j;
}

Json cohomology_json(const CohomologyReport& rep) {
    Json j;
    j["check"] = "cohomology";
    j["dim_source"] = rep.dim_source;
    j["dim_kernel"] = rep.dim_kernel;
    j["rank_outgoing"] = rep.rank_out;
    j["rank_incoming"] = rep.rank_in;
    j["dimension"] = rep.dim_H;
    Json reps = Json::array();
    for (const Poly& p : rep.representatives) reps.push_back(p.str());
    j["representatives"] = reps;
    if (rep.k_gt_l && rep.dim_H > 0)
        j["note"] = "nonzero dimension with weight > ghost at a finite "
                    "truncation means the bound is too small, not a "
                    "counterexample";
    return j;
}

Json sign_conventions_json() {
    Json j;
    j["odd_bracket"] =
        "momentum/coordinate pairings (xs_i, x^j) = (etas_a, eta^b) = "
        "(cs_al, c^be) = +delta; connection rows (xs_i, z^B) = +z^C A^B_{Ci}, "
        "(xs_i, z*_B) = -A^C_{Bi} z*_C with computed curvature";
    j["even_bracket"] =
        "{dphis_A, phi^A} = +1, {dphi^A, phis_A} = -1; Delta = "
        "(-1)^A dphi^A dphis_A; derived regeneration {{Delta,F},G}|_N = "
        "(-1)^{eps F} (F,G)";
    j["lift"] = "Psi = {Delta,S} carries the term -dc^al R^i_al xs_i";
    return j;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

VerifyOutcome verify_system(const ElaboratedSystem& es) {
    VerifyOutcome out;
    GaugeSystem sys(es.spec);
    Json j;
    j["schema_version"] = "1";
    j["system"] = es.spec.name;
    Json checks = Json::array();
    bool all = true, inconc = false;

    // 1. commutation relations of the gauge generators
    for (size_t a = 0; a < sys.spec.R.size(); ++a) {
        for (size_t b = a; b < sys.spec.R.size(); ++b) {
            Poly br = sys.odd.apply(sys.spec.R[a], sys.spec.R[b]);
            Json e;
            e["check"] = "commutation";
            e["pair"] = "R" + std::to_string(a + 1) + ",R" + std::to_string(b + 1);
            e["bracket"] = br.str();
            auto wit = sys.spec.commutator_witness.find({(int)a, (int)b});
            if (wit != sys.spec.commutator_witness.end()) {
                Poly diff = br - wit->second;
                e["witness"] = wit->second.str();
                e["pass"] = diff.is_zero();
                all = all && diff.is_zero();
            } else if (br.is_zero()) {
                e["pass"] = true;
            } else {
                auto cert = ideal_membership(sys, br, es.deg);
                e["in_ideal"] = cert.has_value();
                if (cert) e["certificate"] = cert_json(sys, *cert);
                e["pass"] = cert.has_value();
                if (!cert) inconc = true;
                all = all && cert.has_value();
            }
            checks.push_back(e);
        }
    }

    // 2. weak Jacobi identity of P
    if (!sys.spec.P.is_zero()) {
        Poly pp = sys.odd.apply(sys.spec.P, sys.spec.P);
        Json e;
        e["check"] = "weak_jacobi";
        e["bracket_PP"] = pp.str();
        if (pp.is_zero()) {
            e["pass"] = true;
        } else {
            auto cert = ideal_membership(sys, pp, es.deg);
            e["in_ideal"] = cert.has_value();
            if (cert) e["certificate"] = cert_json(sys, *cert);
            e["pass"] = cert.has_value();
            if (!cert) inconc = true;
            all = all && cert.has_value();
        }
        checks.push_back(e);
    }

    // 3. projectibility of P and V
    auto proj = [&](const char* label, const Poly& U) {
        if (U.is_zero()) return;
        auto rep = check_projectible(sys, U, es.deg);
        Json e = projectibility_json(rep);
        e["subject"] = label;
        // enrich certificates with full witnesses
        Json items = Json::array();
        for (const auto& it : rep.items) {
            Json ie;
            ie["generator"] = it.generator;
            ie["bracket"] = it.bracket.str();
            ie["in_ideal"] = it.in_ideal;
            if (it.cert) ie["certificate"] = cert_json(sys, *it.cert);
            items.push_back(ie);
        }
        e["items"] = items;
        e["pass"] = rep.projectible;
        all = all && rep.projectible;
        inconc = inconc || rep.inconclusive;
        checks.push_back(e);
    };
    proj("P", sys.spec.P);
    proj("V", sys.spec.V);

    // 3b. weak Poisson compatibility of V with P
    if (!sys.spec.V.is_zero() && !sys.spec.P.is_zero()) {
        Poly vp = sys.odd.apply(sys.spec.V, sys.spec.P);
        Json e;
        e["check"] = "weak_poisson_vector_field";
        e["bracket_VP"] = vp.str();
        if (vp.is_zero()) {
            e["pass"] = true;
        } else {
            auto cert = ideal_membership(sys, vp, es.deg);
            e["in_ideal"] = cert.has_value();
            if (cert) e["certificate"] = cert_json(sys, *cert);
            e["pass"] = cert.has_value();
            if (!cert) inconc = true;
            all = all && cert.has_value();
        }
        checks.push_back(e);
    }

    // 4. master check of a provided S
    if (es.master) {
        MasterFunction S;
        S.value = *es.master;
        auto rep = check_master(sys, S);
        Json e = master_report_json(rep);
        all = all && rep.ok;
        checks.push_back(e);
    }

    j["checks"] = checks;
    j["pass"] = all;
    out.report = std::move(j);
    out.all_passed = all;
    out.inconclusive = inconc;
    return out;
}

} // namespace gsys
