#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monocert/operators.hpp"
#include "monocert/report.hpp"

namespace monocert {

// A bidual/dual pair to be tested against a graph, with a record of which
// construction produced it.
struct WitnessPoint {
    AnyVec x_bidual;
    FiniteVec x_star;
    std::string provenance;
};

// min over the sample of <x - a, x* - a*>. Nonnegative min means the witness
// is monotonically related to the sampled points.
Rational mono_related_min(const GraphSample& g, const AnyVec& x, const FiniteVec& xstar);

// Quadratic criterion for monotone relatedness against a linear graph:
// <x, x*> >= 0 and [<a*, x> + <x*, a>]^2 <= 4 <x*, x> <a*, a> for all sample
// points. Returns the most violating point when the test fails.
struct PhelpsSimonsResult {
    bool pass;
    std::optional<GraphPoint> worst;
    Rational worst_margin;  // violation amount (0 when pass)
};

PhelpsSimonsResult phelps_simons_check(const GraphSample& g, const AnyVec& x,
                                       const FiniteVec& xstar);

// Negative-infimum gap <x**, x*> - sup(bracket) for a subspace graph sample.
// When the bracket vanishes on the spanning set (and the span is skew, which
// is certified on all basis pairs), the sup over the whole span is 0 and the
// gap is exact; a positive gap certifies the type-(NI) inequality fails at
// this witness. A nonvanishing bracket direction makes the sup +inf, reported
// as the -inf marker.
struct NiGapResult {
    bool sup_unbounded;          // some spanning bracket is nonzero
    bool exact;                  // spanning certificate succeeded
    Rational gap;                // exact gap when !sup_unbounded && exact
    Rational sampled_sup;        // fallback value when !exact
};

NiGapResult ni_gap(const GraphSample& g, const WitnessPoint& w);

// Witness computation around (-A z*, z*), <alpha, z*> != 0:
// the coupling infimum over the truncated graph span equals -<alpha, z*>^2
// (finite), while z* sits at positive l^1 distance from the truncated range
// span {x* : supp in [1..N], <alpha, x*> = 0}, computed by an exact LP.
// Finite infimum + positive range distance is the truncated trace of the
// Brondsted-Rockafellar property failing.
struct BrWitness {
    Rational inf_coupling;
    Rational range_distance;
    CertReport fragment;
};

BrWitness br_witness_check(const AlphaSpec& alpha, const FiniteVec& zstar, int N);

// Two adjoint-graph points whose monotonicity product is negative:
// ((S e_1 - alpha, e_1), (0, 0)), product <S e_1 - alpha, e_1> = -alpha_1.
// The skew part contributes nothing; only the r-multiples of alpha do.
struct AdjointWitness {
    GraphPoint p1, p2;
    Rational product;
};

AdjointWitness adjoint_nonmono_witness(const AlphaSpec& alpha);

// min over t of t^2 - a t + 1, exactly 1 - a^2/4. The bidual functionals the
// separation arguments produce (Banach limits) have no finite description;
// this scalar quadratic is the inequality those arguments reduce to, with
// t standing for the pairing against the separating functional.
Rational quadratic_gap(const Rational& a);

// Grid companion: the minimum of t^2 - a t + 1 over the rational grid
// [lo, hi] with the given step.
Rational quadratic_grid_min(const Rational& a, const Rational& lo, const Rational& hi,
                            const Rational& step);

// (a1 - a2)(1/a1 - 1/a2) * pairing_val for 0 < a1 < a2 < 2, pairing_val >= 1;
// always negative, which is what separates the two maximal extensions.
Rational nonuniqueness_product(const Rational& a1, const Rational& a2,
                               const Rational& pairing_val);

// Strict inequality chain for the sum operator with f = 1/2 ||.||^2:
// w = A* x0*, y0* = ||w|| sign(w_m) e_m at an attaining coordinate m,
// z0* = y0* + x0*, and then exactly
//   f**(w) + f*(y0*) <  <w, y0*> + <alpha, x0*>^2   and
//   f**(w) + f*(z0* - x0*) < <w, z0*>.
CertReport sum_ni_witness(const AlphaSpec& alpha, const FiniteVec& x0star, int N);

}  // namespace monocert
