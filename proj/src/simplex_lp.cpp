#include "cubewords/detail/simplex_lp.hpp"

#include <stdexcept>

namespace cubewords::detail {

namespace {

// Tableau with rows 0..m-1 = constraints, row m = objective (reduced costs).
// Column layout: 0..total-1 variables, column `total` = rhs.
struct Tableau {
    int m, total;
    std::vector<std::vector<Rational>> t;  // (m+1) x (total+1)
    std::vector<int> basis;                // basis[i] = variable basic in row i

    Tableau(int m_, int total_) : m(m_), total(total_) {
        t.assign(m + 1, std::vector<Rational>(total + 1, 0));
        basis.assign(m, -1);
    }

    void pivot(int row, int col) {
        Rational inv = t[row][col];
        for (int j = 0; j <= total; ++j) t[row][j] /= inv;
        for (int i = 0; i <= m; ++i) {
            if (i == row) continue;
            Rational f = t[i][col];
            if (f == 0) continue;
            for (int j = 0; j <= total; ++j) t[i][j] -= f * t[row][j];
        }
        basis[row] = col;
    }

    // Bland: entering = lowest-index variable with positive reduced cost
    // (maximization), leaving = min ratio with lowest basis index tie-break.
    // Returns false when optimal, throws on unbounded.
    bool bland_step(int allowed_cols) {
        int enter = -1;
        for (int j = 0; j < allowed_cols; ++j) {
            if (t[m][j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return false;
        int leave = -1;
        Rational best_ratio = 0;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][total] / t[i][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) throw std::runtime_error("lp unbounded");
        pivot(leave, enter);
        return true;
    }
};

}  // namespace

LpResult solve_lp_equality(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                           std::vector<Rational> c) {
    int m = static_cast<int>(A.size());
    int n = static_cast<int>(c.size());
    for (const auto& row : A)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("lp: ragged constraint matrix");
    if (static_cast<int>(b.size()) != m) throw std::invalid_argument("lp: bad rhs size");

    // normalize rhs >= 0
    for (int i = 0; i < m; ++i) {
        if (b[i] < 0) {
            for (auto& v : A[i]) v = -v;
            b[i] = -b[i];
        }
    }

    int total = n + m;  // original + artificial
    Tableau tab(m, total);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) tab.t[i][j] = A[i][j];
        tab.t[i][n + i] = 1;
        tab.t[i][total] = b[i];
        tab.basis[i] = n + i;
    }
    // phase 1: maximize -(sum of artificials); reduced costs via basis rows
    for (int j = 0; j <= total; ++j) {
        Rational s = 0;
        for (int i = 0; i < m; ++i) s += tab.t[i][j];
        tab.t[m][j] = s;  // cost row = sum of artificial rows (to be driven to 0)
    }
    for (int i = 0; i < m; ++i) tab.t[m][n + i] = 0;
    while (tab.bland_step(n)) {
    }
    if (tab.t[m][total] != 0) return {LpResult::Status::Infeasible, 0, {}};

    // drive remaining artificial variables out of the basis
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j) {
            if (tab.t[i][j] != 0) {
                col = j;
                break;
            }
        }
        if (col >= 0) tab.pivot(i, col);
        // a fully-zero row is a redundant constraint; the artificial stays
        // basic at value 0 and never re-enters (phase 2 restricts columns)
    }

    // phase 2 objective
    for (int j = 0; j <= total; ++j) tab.t[m][j] = 0;
    for (int j = 0; j < n; ++j) tab.t[m][j] = c[j];
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n && tab.t[m][tab.basis[i]] != 0) {
            Rational f = tab.t[m][tab.basis[i]];
            for (int j = 0; j <= total; ++j) tab.t[m][j] -= f * tab.t[i][j];
        }
    }
    try {
        while (tab.bland_step(n)) {
        }
    } catch (const std::runtime_error&) {
        return {LpResult::Status::Unbounded, 0, {}};
    }

    LpResult res{LpResult::Status::Optimal, 0, std::vector<Rational>(n, 0)};
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i][total];
    res.objective = -tab.t[m][total];
    return res;
}

}  // namespace cubewords::detail
