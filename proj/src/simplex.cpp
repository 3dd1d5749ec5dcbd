#include "monocert/simplex.hpp"

#include <cstddef>
#include <stdexcept>

namespace monocert {

namespace {

// Dense tableau: rows = constraints, one objective row at the end.
// basis[i] is the variable basic in row i.
struct Tableau {
    size_t m, n;  // constraints, variables (excluding objective row/col)
    std::vector<std::vector<Rational>> t;  // (m+1) x (n+1); last col = rhs
    std::vector<size_t> basis;

    void pivot(size_t row, size_t col) {
        Rational p = t[row][col];
        for (auto& v : t[row]) v /= p;
        for (size_t i = 0; i <= m; ++i) {
            if (i == row || t[i][col] == 0) continue;
            Rational f = t[i][col];
            for (size_t j = 0; j <= n; ++j) t[i][j] -= f * t[row][j];
        }
        basis[row] = col;
    }

    // Bland: entering = lowest-index column with negative reduced cost;
    // leaving = lowest-index basic variable among the ratio-test minima.
    // Returns false when optimal, throws on unbounded.
    bool step() {
        size_t enter = n;
        for (size_t j = 0; j < n; ++j) {
            if (t[m][j] < 0) { enter = j; break; }
        }
        if (enter == n) return false;
        size_t leave = m;
        Rational best;
        for (size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][n] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw std::runtime_error("lp unbounded");
        pivot(leave, enter);
        return true;
    }
};

}  // namespace

LpResult lp_solve_eq(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                     std::vector<Rational> c) {
    size_t m = A.size(), n = c.size();
    for (auto& row : A)
        if (row.size() != n) throw std::invalid_argument("lp: ragged constraint matrix");
    if (b.size() != m) throw std::invalid_argument("lp: rhs size mismatch");

    for (size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            for (auto& v : A[i]) v = -v;
            b[i] = -b[i];
        }
    }

    // Phase I with one artificial per row.
    Tableau tab;
    tab.m = m;
    tab.n = n + m;
    tab.t.assign(m + 1, std::vector<Rational>(tab.n + 1, Rational(0)));
    tab.basis.resize(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) tab.t[i][j] = A[i][j];
        tab.t[i][n + i] = 1;
        tab.t[i][tab.n] = b[i];
        tab.basis[i] = n + i;
    }
    for (size_t j = 0; j < n; ++j) {
        Rational s(0);
        for (size_t i = 0; i < m; ++i) s += A[i][j];
        tab.t[m][j] = -s;
    }
    {
        Rational s(0);
        for (size_t i = 0; i < m; ++i) s += b[i];
        tab.t[m][tab.n] = -s;
    }
    while (tab.step()) {}
    if (tab.t[m][tab.n] != 0) return {LpResult::Status::Infeasible, Rational(0), {}};

    // Drive any artificial still basic (at value 0) out of the basis. A row
    // that cannot be pivoted is all zero on the original columns, i.e. a
    // redundancy, and is dropped below.
    for (size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        for (size_t j = 0; j < n; ++j) {
            if (tab.t[i][j] != 0) {
                tab.pivot(i, j);
                break;
            }
        }
    }

    // Phase II tableau: original columns only. Leaving the artificial
    // columns in with doctored costs would break the row-space invariant the
    // pivots rely on.
    Tableau t2;
    t2.n = n;
    t2.t.clear();
    t2.basis.clear();
    for (size_t i = 0; i < m; ++i) {
        if (tab.basis[i] >= n) continue;  // redundant row
        std::vector<Rational> row(n + 1);
        for (size_t j = 0; j < n; ++j) row[j] = tab.t[i][j];
        row[n] = tab.t[i][tab.n];
        t2.t.push_back(std::move(row));
        t2.basis.push_back(tab.basis[i]);
    }
    t2.m = t2.t.size();
    t2.t.push_back(std::vector<Rational>(n + 1, Rational(0)));
    for (size_t j = 0; j < n; ++j) t2.t[t2.m][j] = c[j];
    for (size_t i = 0; i < t2.m; ++i) {
        Rational f = t2.t[t2.m][t2.basis[i]];
        if (f == 0) continue;
        for (size_t j = 0; j <= n; ++j) t2.t[t2.m][j] -= f * t2.t[i][j];
    }

    try {
        while (t2.step()) {}
    } catch (const std::runtime_error&) {
        return {LpResult::Status::Unbounded, Rational(0), {}};
    }

    std::vector<Rational> x(n, Rational(0));
    for (size_t i = 0; i < t2.m; ++i) x[t2.basis[i]] = t2.t[i][n];
    Rational obj(0);
    for (size_t j = 0; j < n; ++j) obj += c[j] * x[j];
    return {LpResult::Status::Optimal, obj, std::move(x)};
}

LpIneqResult lp_maximize_ineq(const std::vector<Rational>& obj,
                              const std::vector<std::vector<Rational>>& G,
                              const std::vector<Rational>& h) {
    size_t nfree = obj.size(), m = G.size();
    // x = u - w with u, w >= 0, plus one slack per row.
    size_t n = 2 * nfree + m;
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < m; ++i) {
        if (G[i].size() != nfree) throw std::invalid_argument("lp: ragged G");
        for (size_t j = 0; j < nfree; ++j) {
            A[i][j] = G[i][j];
            A[i][nfree + j] = -G[i][j];
        }
        A[i][2 * nfree + i] = 1;
    }
    std::vector<Rational> c(n, Rational(0));
    for (size_t j = 0; j < nfree; ++j) {
        c[j] = -obj[j];
        c[nfree + j] = obj[j];
    }
    LpResult r = lp_solve_eq(std::move(A), h, std::move(c));
    LpIneqResult out{r.status, Rational(0), {}};
    if (r.status != LpResult::Status::Optimal) return out;
    out.objective = -r.objective;
    out.x.resize(nfree);
    for (size_t j = 0; j < nfree; ++j) out.x[j] = r.x[j] - r.x[nfree + j];
    return out;
}

}  // namespace monocert
