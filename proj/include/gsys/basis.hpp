#ifndef GSYS_BASIS_HPP
#define GSYS_BASIS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "gsys/poly.hpp"

namespace gsys {

// A finite monomial window on a chart, cut out by grading constraints.
// Enumeration is deterministic (lexicographic in the canonical order).
struct Window {
    std::optional<int> ghost;
    std::optional<int> parity;
    std::optional<int> form;            // exact form degree
    int deg_min = 0;                    // momentum degree range
    std::optional<int> deg_max;
    int res_min = 0;
    std::optional<int> res_max;
    int base_deg_max = 0;
    bool allow_velocity = false;          // include d(phi)
    bool allow_velocity_momentum = false; // include d(phi*)
    bool allow_momentum = true;           // include phi*
    bool allow_fibers = true;             // include eta, c
};

// All monomials of the window, in deterministic order.
std::vector<Monomial> enumerate_basis(const ChartPtr& chart, const Window& w);

// Index of a monomial list for linear-system assembly.
struct MonomIndex {
    std::map<Monomial, int> index;
    std::vector<Monomial> list;
    int intern(const Monomial& m) {
        auto it = index.find(m);
        if (it != index.end()) return it->second;
        int id = (int)list.size();
        index.emplace(m, id);
        list.push_back(m);
        return id;
    }
    int find(const Monomial& m) const {
        auto it = index.find(m);
        return it == index.end() ? -1 : it->second;
    }
    int size() const { return (int)list.size(); }
};

} // namespace gsys

#endif
