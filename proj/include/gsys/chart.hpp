#ifndef GSYS_CHART_HPP
#define GSYS_CHART_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace gsys {

// The five gradings carried by a chart variable. momentum/resolution are
// undefined for velocity-sector variables; form degree is 1 exactly for
// velocities d(phi).
struct Grading {
    int parity = 0; // mod 2
    int ghost = 0;
    std::optional<int> momentum;   // Deg
    std::optional<int> resolution; // res
    int form = 0;
};

enum class VarKind {
    Base,             // x^i
    AntighostFiber,   // eta^a (one per constraint)
    GhostFiber,       // c^alpha (one per gauge generator)
    Momentum,         // x*, eta*, c*
    Velocity,         // dx, deta, dc
    VelocityMomentum, // dx*, deta*, dc*
};

// Which sector of the chart a variable's "family" lives in.
enum class Sector { X, Eta, C };

struct VarInfo {
    std::string name;
    Grading g;
    VarKind kind = VarKind::Base;
    Sector sector = Sector::X;
    int partner = -1; // base/fiber variable this momentum/velocity belongs to
};

enum class ChartLevel { M, N, PiTN };

// An ordered list of graded variables. Declaration order is the canonical
// monomial order. Charts are immutable once built.
class Chart {
public:
    int add(VarInfo v);
    int size() const { return (int)vars_.size(); }
    const VarInfo& var(int id) const { return vars_.at(id); }
    int find(const std::string& name) const; // -1 if absent
    int require(const std::string& name) const;
    ChartLevel level = ChartLevel::M;

    bool is_odd(int id) const { return vars_[id].g.parity != 0; }

    // id of the momentum partner of a base/fiber variable, -1 if none.
    int momentum_of(int id) const;
    // id of the velocity partner d(v), -1 if none.
    int velocity_of(int id) const;

    const std::vector<VarInfo>& vars() const { return vars_; }

private:
    std::vector<VarInfo> vars_;
    std::unordered_map<std::string, int> by_name_;
};

using ChartPtr = std::shared_ptr<const Chart>;

// Gradings from the canonical tables. base: (0,0,0,0); eta: (1,-1,0,1);
// c: (1,1,0,0); momenta get parity+1, ghost 1-gh, Deg 1; velocities get
// parity+1, ghost-1, momentum/res undefined, form degree 1 for d(phi).
Grading base_grading();
Grading eta_grading();
Grading c_grading();
Grading momentum_grading(const Grading& of_partner);
Grading velocity_grading(const Grading& of_partner, bool of_momentum);

// Builds the full PiT(N) chart for a system with the given base coordinate
// names, one eta per constraint and one c per gauge generator. Momenta are
// named with an "s" suffix, velocities with a "d" prefix. Variable order:
// x.., eta.., c.., xs.., etas.., cs.., dx.., deta.., dc.., dxs.., detas.., dcs..
ChartPtr build_system_chart(const std::vector<std::string>& base_names,
                            int n_constraints, int n_gauge,
                            const std::vector<int>& base_parities = {});

} // namespace gsys

#endif
