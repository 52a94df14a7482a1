#ifndef GSYS_LINALG_HPP
#define GSYS_LINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include "gsys/rational.hpp"

namespace gsys {

// Sparse exact-rational matrix, column-major.
struct SparseMat {
    int rows = 0;
    int cols = 0;
    std::vector<std::map<int, Rat>> col;

    void resize(int r, int c) {
        rows = r;
        cols = c;
        col.assign(c, {});
    }
    void set(int r, int c, const Rat& v) {
        if (v == 0) col[c].erase(r);
        else col[c][r] = v;
    }
    Rat get(int r, int c) const {
        auto it = col[c].find(r);
        return it == col[c].end() ? Rat(0) : it->second;
    }
};

SparseMat matmul(const SparseMat& A, const SparseMat& B);
bool is_zero(const SparseMat& A);
int rank(const SparseMat& A);

struct LinSolution {
    bool consistent = false;
    std::vector<Rat> particular;                // size = cols
    std::vector<std::vector<Rat>> nullspace;    // basis of ker
};

// Solves A x = b exactly. Free variables are set to zero in the particular
// solution; elimination order is deterministic.
LinSolution solve(const SparseMat& A, const std::vector<Rat>& b,
                  bool want_nullspace = false);

// Basis of ker(A).
std::vector<std::vector<Rat>> nullspace(const SparseMat& A);

// Reduces v modulo the column space of A; returns the reduced vector.
// Zero result means v lies in the column space.
std::vector<Rat> reduce_mod_columns(const SparseMat& A, std::vector<Rat> v);

} // namespace gsys

#endif
