#pragma once

#include <string>
#include <vector>

#include "monocert/convex.hpp"
#include "monocert/report.hpp"
#include "monocert/vec.hpp"

namespace monocert {

// Partial inf-convolutions of F_T = indicator of {(-A x*, x*)} with
// F = f (+) f*. The indicator collapses each infimum to an exact affine
// solve, so both evaluators are exact.

// (F_T [box_1] F)(x, x*): the only admissible split is u = -A x*, giving
// f(x + A x*) + f*(x*).
ExtRat box1_structured(const AlphaSpec& alpha, const ConvexFnTag& f, const AnyVec& x,
                       const FiniteVec& xstar);

// (F_T [box_2] F)(x, x*): admissible v solve A(x* - v) = -x. On [1..K] the
// system is upper triangular with diagonal alpha_n^2; coordinates with
// alpha_n = 0 force a zero right-hand side and leave v_n free, which every
// tag in the table minimizes at v_n = 0.
ExtRat box2_structured(const AlphaSpec& alpha, const ConvexFnTag& f, const FiniteVec& x,
                       const FiniteVec& xstar);

// ------------------------------------------------- brute-force dual formula

// Separable test functions on R x R: F(x, y) = gx(x) + gy(y), each factor a
// coefficient-weighted square or the indicator of {0}.
struct ScalarPiece {
    enum class Kind { Square, IndicatorZero } kind = Kind::Square;
    double coeff = 0.5;  // for Square: coeff * t^2, coeff > 0

    double eval(double t) const;
    double conj(double t) const;  // exact: t^2/(4 coeff), or 0
};

struct SeparableSpec {
    ScalarPiece gx, gy;
    std::string name;
};

// Verifies both conjugate formulas for partial inf-convolutions,
//   (F1 [box_2] F2)*(x*, y*) = min_u* [F1*(x* - u*, y*) + F2*(u*, y*)]
//   (F1 [box_1] F2)*(x*, y*) = min_v* [F1*(x*, v*) + F2*(x*, y* - v*)],
// at a handful of dual points, with every infimum/supremum (the inner
// inf-convolution, the outer conjugate, the minimum over splittings, and the
// conjugates on the split side) evaluated by exhaustive grid search, refined
// around the incumbent until the step is below refine_step. All the pieces
// are convex, so refinement around the coarse optimum is sound. The attained
// minimizer is certified by a no-better-neighbor check at the final
// resolution. The closed-subspace qualification is automatic in R^2.
struct DualFormulaResult {
    bool pass;
    double max_abs_gap;
    CertReport fragment;
};

DualFormulaResult dual_formula_bruteforce(const SeparableSpec& f1, const SeparableSpec& f2,
                                          double grid_radius, double refine_step,
                                          double tolerance);

// --------------------------------------------------- counterexample runners

// First runner: f = ||.||_inf, v0* = e_{i0}, v0 = 3 ||alpha||^2 e_{i0};
// certifies f*(v0*) + f**(v0 - A* v0*) < <v0, v0*> exactly, hence
// F_T [box_1] (f (+) f*) fails the bigger-conjugate inequality.
CertReport bc_fail_a2(const AlphaSpec& alpha, int i0);

// Second runner: f = 1/2 ||.||^2, requires alpha_{i0}^2 > 1/2 and
// ||alpha||_inf <= 1; v1* = 1/2 e_{i0}, v1 = (1 + alpha_{i0}^2/2) e_{i0};
// certifies 1/2||v1*||_1^2 + 1/2||v1 - A* v1*||_inf^2 < <v1*, v1>.
CertReport bc_fail_a4(const AlphaSpec& alpha, int i0);

}  // namespace monocert
