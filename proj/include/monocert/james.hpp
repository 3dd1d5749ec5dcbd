#pragma once

#include <vector>

#include "monocert/rational.hpp"
#include "monocert/vec.hpp"

namespace monocert {

// Squared James norm of x (support within [1..N]):
//   sup over n_1 < ... < n_k of (x_{n_1}-x_{n_2})^2 + ... + (x_{n_{k-1}}-x_{n_k})^2.
// Computed by an O(N^2) chain DP over indices 1..N+1 with x_{N+1} := 0.
//
// One appended zero index suffices: the sequence vanishes beyond its support,
// so in any chain the indices past N form a suffix of equal (zero) entries
// whose internal increments vanish; collapsing that suffix to the single
// index N+1 leaves the chain value unchanged.
Rational james_norm_sq(const FiniteVec& x, int N);

struct JamesChain {
    Rational value_sq;
    std::vector<int> chain;  // maximizing index chain (may be empty for x = 0)
};

// Same DP, also reporting one maximizing chain (for cutting planes).
JamesChain james_norm_sq_chain(const FiniteVec& x, int N);

// Independent reference: exhaustive maximum over all index subsequences of
// length >= 2 inside [1..N+1]. Exponential; intended for N <= 12.
Rational james_norm_sq_enum(const FiniteVec& x, int N);

// Bracket [lo, hi] with hi - lo <= tol around
//   sup { <x, f> : james_norm_sq(x) <= 1, supp(x) within [1..M] },
// M = max support of f. Truncating any James-ball element to [1..M] keeps it
// in the ball and preserves <x, f>, so the finite-dimensional body suffices.
//
// Kelley cutting planes: maximize <x, f> over |x_i| <= 1 plus accumulated
// linear cuts; the separation oracle is the James DP, whose maximizing chain
// supplies the violated quadratic, linearized at the scaled-back iterate.
struct JamesDualBracket {
    Rational lo, hi;
    bool converged;
    int iterations;
};

JamesDualBracket james_dual_norm(const FiniteVec& f, const Rational& tol,
                                 int max_iterations = 500);

// Reference value: max of <x, f> over the grid {-1, -1+step, ..., 1}^M
// restricted to the James ball. Exact rational grid search; small M only.
Rational james_dual_grid_opt(const FiniteVec& f, const Rational& step);

}  // namespace monocert
