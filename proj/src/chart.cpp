#include <cctype>
#include "gsys/chart.hpp"

namespace gsys {

int Chart::add(VarInfo v) {
    if (by_name_.count(v.name))
        throw std::invalid_argument("duplicate variable name: " + v.name);
    int id = (int)vars_.size();
    by_name_[v.name] = id;
    vars_.push_back(std::move(v));
    return id;
}

int Chart::find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : it->second;
}

int Chart::require(const std::string& name) const {
    int id = find(name);
    if (id < 0) throw std::invalid_argument("unknown variable name: " + name);
    return id;
}

int Chart::momentum_of(int id) const {
    for (int j = 0; j < (int)vars_.size(); ++j)
        if (vars_[j].kind == VarKind::Momentum && vars_[j].partner == id) return j;
    return -1;
}

int Chart::velocity_of(int id) const {
    for (int j = 0; j < (int)vars_.size(); ++j)
        if ((vars_[j].kind == VarKind::Velocity || vars_[j].kind == VarKind::VelocityMomentum) &&
            vars_[j].partner == id)
            return j;
    return -1;
}

Grading base_grading() { return Grading{0, 0, 0, 0, 0}; }
Grading eta_grading() { return Grading{1, -1, 0, 1, 0}; }
Grading c_grading() { return Grading{1, 1, 0, 0, 0}; }

Grading momentum_grading(const Grading& p) {
    Grading g;
    g.parity = (p.parity + 1) & 1;
    g.ghost = 1 - p.ghost;
    g.momentum = 1;
    g.resolution = (p.ghost == 1) ? 1 : 0; // c* carries resolution degree 1
    g.form = 0;
    return g;
}

Grading velocity_grading(const Grading& p, bool of_momentum) {
    Grading g;
    g.parity = (p.parity + 1) & 1;
    g.ghost = p.ghost - 1;
    g.momentum = std::nullopt;
    g.resolution = std::nullopt;
    g.form = of_momentum ? 0 : 1;
    return g;
}

namespace {

// x -> xs, q1 -> qs1, eta2 -> etas2: the star suffix lands before any
// trailing index digits.
std::string momentum_name(const std::string& name) {
    size_t cut = name.size();
    while (cut > 0 && std::isdigit((unsigned char)name[cut - 1])) --cut;
    return name.substr(0, cut) + "s" + name.substr(cut);
}

} // namespace

ChartPtr build_system_chart(const std::vector<std::string>& base_names,
                            int n_constraints, int n_gauge,
                            const std::vector<int>& base_parities) {
    auto chart = std::make_shared<Chart>();
    chart->level = ChartLevel::PiTN;

    std::vector<int> phi_ids;
    for (size_t i = 0; i < base_names.size(); ++i) {
        Grading g = base_grading();
        if (i < base_parities.size()) g.parity = base_parities[i] & 1;
        phi_ids.push_back(chart->add({base_names[i], g, VarKind::Base, Sector::X, -1}));
    }
    for (int a = 1; a <= n_constraints; ++a)
        phi_ids.push_back(chart->add({"eta" + std::to_string(a), eta_grading(),
                                      VarKind::AntighostFiber, Sector::Eta, -1}));
    for (int al = 1; al <= n_gauge; ++al)
        phi_ids.push_back(chart->add({"c" + std::to_string(al), c_grading(),
                                      VarKind::GhostFiber, Sector::C, -1}));

    std::vector<int> star_ids;
    for (int id : phi_ids) {
        const VarInfo& v = chart->var(id);
        star_ids.push_back(chart->add({momentum_name(v.name), momentum_grading(v.g),
                                       VarKind::Momentum, v.sector, id}));
    }
    for (int id : phi_ids) {
        const VarInfo& v = chart->var(id);
        chart->add({"d" + v.name, velocity_grading(v.g, false), VarKind::Velocity,
                    v.sector, id});
    }
    for (int id : star_ids) {
        const VarInfo& v = chart->var(id);
        chart->add({"d" + v.name, velocity_grading(v.g, true),
                    VarKind::VelocityMomentum, v.sector, id});
    }
    return chart;
}

} // namespace gsys
