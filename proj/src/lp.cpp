#include "lexiepist/lp.hpp"

#include <cassert>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace lexiepist {

namespace {

// Tableau with rows 0..m-1 (constraints, basis columns held at identity) and
// an objective row storing reduced costs (z_j - c_j form: optimal when all
// entries are >= 0).
struct Tableau {
    std::size_t m, n;  // constraints, total variables
    std::vector<std::vector<Rational>> rows;  // m rows of n coefficients
    std::vector<Rational> rhs;                // length m, kept >= 0
    std::vector<Rational> obj;                // length n, reduced costs
    Rational obj_value{0};
    std::vector<std::size_t> basis;           // basic variable per row
    std::vector<bool> blocked;                // columns barred from entering

    void pivot(std::size_t r, std::size_t col) {
        const Rational piv = rows[r][col];
        assert(piv != 0);
        for (auto& v : rows[r]) v /= piv;
        rhs[r] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const Rational f = rows[i][col];
            for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
            rhs[i] -= f * rhs[r];
        }
        if (obj[col] != 0) {
            const Rational f = obj[col];
            for (std::size_t j = 0; j < n; ++j) obj[j] -= f * rows[r][j];
            obj_value -= f * rhs[r];
        }
        basis[r] = col;
    }

    // Returns false when unbounded.
    bool optimize() {
        for (;;) {
            std::size_t enter = n;
            for (std::size_t j = 0; j < n; ++j)  // Bland: lowest index first
                if (!blocked[j] && obj[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == n) return true;
            std::size_t leave = m;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (rows[i][enter] <= 0) continue;
                Rational ratio = rhs[i] / rows[i][enter];
                if (leave == m || ratio < best ||
                    (ratio == best && basis[i] < basis[leave]))
                    leave = i, best = ratio;
            }
            if (leave == m) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult solve_lp_max(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                      const std::vector<Rational>& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("lp: ragged constraint matrix");
    if (b.size() != m) throw std::invalid_argument("lp: rhs size mismatch");

    for (std::size_t i = 0; i < m; ++i)
        if (b[i] < 0) {
            for (auto& v : A[i]) v = -v;
            b[i] = -b[i];
        }

    Tableau t;
    t.m = m;
    t.n = n + m;  // artificials appended
    t.rows.assign(m, std::vector<Rational>(t.n, Rational(0)));
    t.rhs = b;
    t.basis.resize(m);
    t.blocked.assign(t.n, false);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = A[i][j];
        t.rows[i][n + i] = 1;
        t.basis[i] = n + i;
    }

    // Phase 1: maximize -(sum of artificials), priced out over the basis.
    t.obj.assign(t.n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t.obj[j] -= t.rows[i][j];
        t.obj_value -= t.rhs[i];
    }
    bool bounded = t.optimize();
    assert(bounded);
    (void)bounded;
    if (t.obj_value != 0) return {LpResult::Status::Infeasible, Rational(0), {}};

    // Drive remaining artificials out of the basis where possible.
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < n) continue;
        std::size_t col = t.n;
        for (std::size_t j = 0; j < n; ++j)
            if (t.rows[i][j] != 0) {
                col = j;
                break;
            }
        if (col < n) t.pivot(i, col);
        // Otherwise the row is redundant; its artificial stays basic at 0.
    }
    for (std::size_t j = n; j < t.n; ++j) t.blocked[j] = true;

    // Phase 2.
    t.obj.assign(t.n, Rational(0));
    t.obj_value = 0;
    for (std::size_t j = 0; j < n; ++j) t.obj[j] = -c[j];
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] >= n || t.obj[t.basis[i]] == 0) continue;
        const Rational f = t.obj[t.basis[i]];
        for (std::size_t j = 0; j < t.n; ++j) t.obj[j] -= f * t.rows[i][j];
        t.obj_value -= f * t.rhs[i];
    }
    if (!t.optimize()) return {LpResult::Status::Unbounded, Rational(0), {}};

    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] < n) x[t.basis[i]] = t.rhs[i];
    return {LpResult::Status::Optimal, t.obj_value, std::move(x)};
}

}  // namespace lexiepist
