#pragma once

#include <vector>

#include "monocert/rational.hpp"

namespace monocert {

// Two-phase primal simplex over exact rationals with Bland's rule, so every
// solve terminates and is deterministic. Problems here are tiny (tens of
// variables), so a dense tableau is fine.
//
// Solves: minimize c^T x  subject to  A x = b, x >= 0.
struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded } status;
    Rational objective;           // valid when Optimal
    std::vector<Rational> x;      // valid when Optimal
};

LpResult lp_solve_eq(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                     std::vector<Rational> c);

// Convenience form: maximize obj^T x over free x subject to G x <= h.
// Free variables are split into positive and negative parts internally.
struct LpIneqResult {
    LpResult::Status status;
    Rational objective;
    std::vector<Rational> x;
};

LpIneqResult lp_maximize_ineq(const std::vector<Rational>& obj,
                              const std::vector<std::vector<Rational>>& G,
                              const std::vector<Rational>& h);

}  // namespace monocert
