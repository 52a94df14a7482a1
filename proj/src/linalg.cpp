#include "gsys/linalg.hpp"

#include <algorithm>

namespace gsys {

SparseMat matmul(const SparseMat& A, const SparseMat& B) {
    SparseMat C;
    C.resize(A.rows, B.cols);
    for (int j = 0; j < B.cols; ++j) {
        std::map<int, Rat> acc;
        for (const auto& [k, bkj] : B.col[j]) {
            for (const auto& [i, aik] : A.col[k]) {
                Rat& t = acc[i];
                t += aik * bkj;
            }
        }
        for (auto& [i, v] : acc)
            if (v != 0) C.col[j][i] = v;
    }
    return C;
}

bool is_zero(const SparseMat& A) {
    for (const auto& c : A.col)
        if (!c.empty()) return false;
    return true;
}

namespace {

// Row-major sparse elimination workspace.
struct Elim {
    std::vector<std::map<int, Rat>> rows; // lhs
    std::vector<Rat> rhs;

    // returns pivot columns (in order); reduces to RREF
    std::vector<std::pair<int, int>> run(int ncols) {
        std::vector<std::pair<int, int>> pivots; // (col, row)
        std::vector<char> row_used(rows.size(), 0);
        for (int c = 0; c < ncols; ++c) {
            int prow = -1;
            for (size_t r = 0; r < rows.size(); ++r) {
                if (row_used[r]) continue;
                auto it = rows[r].find(c);
                if (it != rows[r].end() && it->second != 0 &&
                    rows[r].begin()->first == c) {
                    prow = (int)r;
                    break;
                }
            }
            if (prow < 0) continue;
            row_used[prow] = 1;
            // normalize
            Rat p = rows[prow][c];
            if (p != 1) {
                for (auto& [cc, v] : rows[prow]) v /= p;
                rhs[prow] /= p;
            }
            // eliminate from every other row
            for (size_t r = 0; r < rows.size(); ++r) {
                if ((int)r == prow) continue;
                auto it = rows[r].find(c);
                if (it == rows[r].end() || it->second == 0) continue;
                Rat f = it->second;
                for (const auto& [cc, v] : rows[prow]) {
                    Rat& t = rows[r][cc];
                    t -= f * v;
                    if (t == 0) rows[r].erase(cc);
                }
                rhs[r] -= f * rhs[prow];
            }
            pivots.push_back({c, prow});
        }
        return pivots;
    }
};

} // namespace

LinSolution solve(const SparseMat& A, const std::vector<Rat>& b,
                  bool want_nullspace) {
    Elim e;
    e.rows.assign(A.rows, {});
    e.rhs.assign(A.rows, 0);
    for (int c = 0; c < A.cols; ++c)
        for (const auto& [r, v] : A.col[c]) e.rows[r][c] = v;
    for (int r = 0; r < A.rows && r < (int)b.size(); ++r) e.rhs[r] = b[r];

    auto pivots = e.run(A.cols);

    LinSolution out;
    // inconsistent when a zero lhs row has nonzero rhs
    for (size_t r = 0; r < e.rows.size(); ++r)
        if (e.rows[r].empty() && e.rhs[r] != 0) return out;
    out.consistent = true;
    out.particular.assign(A.cols, 0);
    std::vector<int> pivot_of_col(A.cols, -1);
    for (auto& [c, r] : pivots) pivot_of_col[c] = r;
    for (auto& [c, r] : pivots) out.particular[c] = e.rhs[r];

    if (want_nullspace) {
        for (int c = 0; c < A.cols; ++c) {
            if (pivot_of_col[c] >= 0) continue;
            std::vector<Rat> v(A.cols, 0);
            v[c] = 1;
            for (auto& [pc, pr] : pivots) {
                auto it = e.rows[pr].find(c);
                if (it != e.rows[pr].end()) v[pc] = -it->second;
            }
            out.nullspace.push_back(std::move(v));
        }
    }
    return out;
}

std::vector<std::vector<Rat>> nullspace(const SparseMat& A) {
    std::vector<Rat> zero(A.rows, 0);
    return solve(A, zero, true).nullspace;
}

int rank(const SparseMat& A) {
    Elim e;
    e.rows.assign(A.rows, {});
    e.rhs.assign(A.rows, 0);
    for (int c = 0; c < A.cols; ++c)
        for (const auto& [r, v] : A.col[c]) e.rows[r][c] = v;
    return (int)e.run(A.cols).size();
}

std::vector<Rat> reduce_mod_columns(const SparseMat& A, std::vector<Rat> v) {
    // eliminate A's columns as rows of [A^T], then reduce v against the pivots
    Elim e;
    e.rows.assign(A.cols, {});
    e.rhs.assign(A.cols, 0);
    for (int c = 0; c < A.cols; ++c)
        for (const auto& [r, val] : A.col[c]) e.rows[c][r] = val;
    auto pivots = e.run(A.rows);
    for (auto& [c, r] : pivots) {
        // c is a coordinate position; e.rows[r] is the reduced generator
        if ((int)v.size() <= c) continue;
        Rat f = v[c];
        if (f == 0) continue;
        for (const auto& [cc, val] : e.rows[r]) v[cc] -= f * val;
    }
    return v;
}

} // namespace gsys
