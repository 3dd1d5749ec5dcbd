#pragma once

#include <memory>
#include <string>

#include "monocert/rational.hpp"
#include "monocert/vec.hpp"

namespace monocert {

// Closed family of stock convex functions with exact conjugates. Conjugates
// come from the table below, never from numeric optimization, so every
// counterexample inequality downstream stays an exact rational comparison.
//
//   SupNorm              ||.||_inf   on X (and, by the same formula, on X**)
//   L1Norm               ||.||_1     on X*
//   HalfSupNormSq        1/2 ||.||_inf^2  on X
//   HalfL1NormSq         1/2 ||.||_1^2    on X*
//   IndicatorUnitBallL1  indicator of the l^1 unit ball on X*
//   HalfDualSupSq        1/2 ||.||_inf^2 on the bidual side (EventualVec)
//   Scaled(lambda, f)    lambda * f, lambda > 0
//
// Conjugate pairs: SupNorm* = IndicatorUnitBallL1, whose conjugate is again
// the sup-norm formula (on the bidual); HalfSupNormSq* = HalfL1NormSq, whose
// conjugate is HalfDualSupSq. (lambda f)*(x*) = lambda f*(x*/lambda), which
// for the degree-2 pairs collapses to Scaled(1/lambda, f*).
struct ConvexFnTag {
    enum class Kind {
        SupNorm,
        L1Norm,
        HalfSupNormSq,
        HalfL1NormSq,
        IndicatorUnitBallL1,
        HalfDualSupSq,
        Scaled,
    };
    Kind kind;
    Rational lambda = Rational(1);              // Scaled only; > 0
    std::shared_ptr<ConvexFnTag> inner;         // Scaled only

    static ConvexFnTag sup_norm() { return {Kind::SupNorm, Rational(1), nullptr}; }
    static ConvexFnTag l1_norm() { return {Kind::L1Norm, Rational(1), nullptr}; }
    static ConvexFnTag half_sup_sq() { return {Kind::HalfSupNormSq, Rational(1), nullptr}; }
    static ConvexFnTag half_l1_sq() { return {Kind::HalfL1NormSq, Rational(1), nullptr}; }
    static ConvexFnTag indicator_ball_l1() {
        return {Kind::IndicatorUnitBallL1, Rational(1), nullptr};
    }
    static ConvexFnTag half_dual_sup_sq() {
        return {Kind::HalfDualSupSq, Rational(1), nullptr};
    }
    static ConvexFnTag scaled(const Rational& lambda, const ConvexFnTag& f);

    std::string name() const;  // serialized form, lambda as "p/q"
    bool operator==(const ConvexFnTag& o) const;
};

// Exact evaluation; +inf for indicator misses. Throws on domain mismatch
// (an l^1-side tag applied to a vector with nonzero tail).
ExtRat eval_fn(const ConvexFnTag& tag, const AnyVec& x);

// The exact conjugate tag. Throws for tags whose conjugate leaves the table
// (L1Norm, HalfDualSupSq, Scaled over degree-1 functions).
ConvexFnTag conj_tag(const ConvexFnTag& tag);

// F = f (+) g on X x X*: F(x, x*) = f(x) + g(x*). The conjugate separates,
// (f (+) g)*(x*, x**) = f*(x*) + g*(x**) on X* x X**.
struct OplusFn {
    ConvexFnTag fx;   // acts on the first slot
    ConvexFnTag gxs;  // acts on the second slot

    ExtRat eval(const AnyVec& x, const AnyVec& xstar) const;
    ExtRat conj_eval(const AnyVec& xstar, const AnyVec& xbidual) const;
    std::string name() const;
};

OplusFn oplus(const ConvexFnTag& fx, const ConvexFnTag& gxs);

// x* in the eps-subdifferential of f at x, decided exactly through the
// conjugate: f(x) + f*(x*) <= <x, x*> + eps.
bool eps_subdiff_test(const ConvexFnTag& tag, const AnyVec& x, const FiniteVec& xstar,
                      const Rational& eps);

}  // namespace monocert
