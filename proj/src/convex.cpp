#include "monocert/convex.hpp"

#include <stdexcept>

namespace monocert {

ConvexFnTag ConvexFnTag::scaled(const Rational& lambda, const ConvexFnTag& f) {
    if (lambda <= 0) throw std::invalid_argument("Scaled tag needs lambda > 0");
    if (f.kind == Kind::Scaled)
        return scaled(lambda * f.lambda, *f.inner);
    ConvexFnTag t{Kind::Scaled, lambda, std::make_shared<ConvexFnTag>(f)};
    return t;
}

std::string ConvexFnTag::name() const {
    switch (kind) {
        case Kind::SupNorm: return "supnorm";
        case Kind::L1Norm: return "l1norm";
        case Kind::HalfSupNormSq: return "half_supnorm_sq";
        case Kind::HalfL1NormSq: return "half_l1norm_sq";
        case Kind::IndicatorUnitBallL1: return "indicator_ball_l1";
        case Kind::HalfDualSupSq: return "half_dual_sup_sq";
        case Kind::Scaled: return "scaled(" + rat_str(lambda) + ", " + inner->name() + ")";
    }
    return "?";
}

bool ConvexFnTag::operator==(const ConvexFnTag& o) const {
    if (kind != o.kind) return false;
    if (kind != Kind::Scaled) return true;
    return lambda == o.lambda && *inner == *o.inner;
}

namespace {

// The l^1-side tags need finite support; a zero tail is fine.
FiniteVec as_finite(const AnyVec& x, const ConvexFnTag& tag) {
    if (const FiniteVec* f = std::get_if<FiniteVec>(&x)) return *f;
    const EventualVec& ev = std::get<EventualVec>(x);
    if (!ev.has_zero_tail())
        throw std::invalid_argument(tag.name() + " is undefined off l^1 (nonzero tail)");
    return ev.to_finite();
}

Rational half(const Rational& q) { return q / 2; }

}  // namespace

ExtRat eval_fn(const ConvexFnTag& tag, const AnyVec& x) {
    using K = ConvexFnTag::Kind;
    switch (tag.kind) {
        case K::SupNorm:
        case K::HalfDualSupSq: {
            Rational s = norm_sup(x);
            return tag.kind == K::SupNorm ? ExtRat(s) : ExtRat(half(s * s));
        }
        case K::HalfSupNormSq: {
            Rational s = norm_sup(x);
            return ExtRat(half(s * s));
        }
        case K::L1Norm:
            return ExtRat(norm_l1(as_finite(x, tag)));
        case K::HalfL1NormSq: {
            Rational s = norm_l1(as_finite(x, tag));
            return ExtRat(half(s * s));
        }
        case K::IndicatorUnitBallL1:
            return norm_l1(as_finite(x, tag)) <= 1 ? ExtRat(Rational(0)) : ExtRat::infinity();
        case K::Scaled: {
            ExtRat v = eval_fn(*tag.inner, x);
            return v.is_finite() ? ExtRat(tag.lambda * v.value()) : v;
        }
    }
    throw std::logic_error("unknown tag");
}

ConvexFnTag conj_tag(const ConvexFnTag& tag) {
    using K = ConvexFnTag::Kind;
    switch (tag.kind) {
        case K::SupNorm:
            return ConvexFnTag::indicator_ball_l1();
        case K::IndicatorUnitBallL1:
            return ConvexFnTag::sup_norm();  // sup-norm formula on the bidual
        case K::HalfSupNormSq:
            return ConvexFnTag::half_l1_sq();
        case K::HalfL1NormSq:
            return ConvexFnTag::half_dual_sup_sq();
        case K::Scaled: {
            // (lambda f)*(x*) = lambda f*(x*/lambda); for the degree-2 pairs
            // this is (1/lambda) f*, which stays in the table.
            K ik = tag.inner->kind;
            if (ik == K::HalfSupNormSq || ik == K::HalfL1NormSq)
                return ConvexFnTag::scaled(Rational(1) / tag.lambda, conj_tag(*tag.inner));
            throw std::invalid_argument("conjugate of scaled " + tag.inner->name() +
                                        " leaves the tag table");
        }
        case K::L1Norm:
        case K::HalfDualSupSq:
            throw std::invalid_argument("conjugate of " + tag.name() + " leaves the tag table");
    }
    throw std::logic_error("unknown tag");
}

OplusFn oplus(const ConvexFnTag& fx, const ConvexFnTag& gxs) { return {fx, gxs}; }

ExtRat OplusFn::eval(const AnyVec& x, const AnyVec& xstar) const {
    return eval_fn(fx, x) + eval_fn(gxs, xstar);
}

ExtRat OplusFn::conj_eval(const AnyVec& xstar, const AnyVec& xbidual) const {
    return eval_fn(conj_tag(fx), xstar) + eval_fn(conj_tag(gxs), xbidual);
}

std::string OplusFn::name() const { return fx.name() + " (+) " + gxs.name(); }

bool eps_subdiff_test(const ConvexFnTag& tag, const AnyVec& x, const FiniteVec& xstar,
                      const Rational& eps) {
    if (eps < 0) throw std::invalid_argument("eps_subdiff_test: eps must be >= 0");
    ExtRat fx = eval_fn(tag, x);
    ExtRat fs = eval_fn(conj_tag(tag), AnyVec(xstar));
    if (!fx.is_finite() || !fs.is_finite()) return false;
    Rational coupling = std::visit([&](const auto& v) { return pair(v, xstar); },
                                   x);
    return fx.value() + fs.value() <= coupling + eps;
}

}  // namespace monocert
