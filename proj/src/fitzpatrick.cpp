#include "monocert/fitzpatrick.hpp"

#include <stdexcept>

namespace monocert {

std::string FitzValue::str() const {
    std::string s = value.str();
    s += exactness == Exactness::ClosedForm
             ? " (closed form)"
             : " (lower bound, " + std::to_string(sample_size) + " samples)";
    return s;
}

FitzValue fitz_skew_exact(const AlphaSpec& alpha, const FiniteVec& x, const FiniteVec& xstar) {
    bool member = (x == -apply_A_alpha(alpha, xstar));
    return {member ? ExtRat(Rational(0)) : ExtRat::infinity(), FitzValue::Exactness::ClosedForm, 0};
}

namespace {

Rational fitz_bracket(const GraphPoint& p, const FiniteVec& x, const FiniteVec& xstar) {
    return pair(AnyVec(x), p.second) + pair(p.first, AnyVec(xstar)) - pair(p.first, p.second);
}

}  // namespace

FitzValue fitz_sampled_lb(const GraphSample& g, const FiniteVec& x, const FiniteVec& xstar) {
    Rational best(0);
    bool have = false;
    for (const auto& p : g.points) {
        Rational b = fitz_bracket(p, x, xstar);
        if (!have || b > best) {
            best = b;
            have = true;
        }
    }
    if (!have) throw std::invalid_argument("fitz_sampled_lb: empty sample");
    return {ExtRat(best), FitzValue::Exactness::LowerBound, static_cast<int>(g.points.size())};
}

ProductFn ProductFn::from_oplus(const OplusFn& f) {
    ProductFn p;
    p.is_fitz_ = false;
    p.oplus_ = f;
    return p;
}

ProductFn ProductFn::fitz_skew(const AlphaSpec& alpha) {
    ProductFn p;
    p.is_fitz_ = true;
    p.alpha_ = alpha;
    return p;
}

ExtRat ProductFn::eval(const AnyVec& x, const AnyVec& xstar) const {
    if (!is_fitz_) return oplus_.eval(x, xstar);
    const FiniteVec* xf = std::get_if<FiniteVec>(&x);
    const FiniteVec* xs = std::get_if<FiniteVec>(&xstar);
    if (!xf || !xs) {
        // Off X x X* the indicator never holds for an honest nonzero tail.
        const EventualVec* ev = std::get_if<EventualVec>(&x);
        const EventualVec* evs = std::get_if<EventualVec>(&xstar);
        if ((ev && !ev->has_zero_tail()) || (evs && !evs->has_zero_tail()))
            return ExtRat::infinity();
        FiniteVec a = xf ? *xf : std::get<EventualVec>(x).to_finite();
        FiniteVec b = xs ? *xs : std::get<EventualVec>(xstar).to_finite();
        return fitz_skew_exact(alpha_, a, b).value;
    }
    return fitz_skew_exact(alpha_, *xf, *xs).value;
}

ExtRat ProductFn::conj_eval(const AnyVec& xstar, const AnyVec& xbidual) const {
    if (!is_fitz_) return oplus_.conj_eval(xstar, xbidual);
    // (indicator of the subspace C)* is the indicator of its annihilator,
    // which is exactly {(x*, A* x*)}.
    const FiniteVec* xs = std::get_if<FiniteVec>(&xstar);
    if (!xs) {
        const EventualVec& ev = std::get<EventualVec>(xstar);
        if (!ev.has_zero_tail()) return ExtRat::infinity();
        return conj_eval(AnyVec(ev.to_finite()), xbidual);
    }
    EventualVec expected = adjoint_A_alpha(alpha_, *xs);
    bool member;
    if (const EventualVec* bid = std::get_if<EventualVec>(&xbidual)) {
        member = (*bid == expected);
    } else {
        const FiniteVec& bf = std::get<FiniteVec>(xbidual);
        member = expected.has_zero_tail() && expected.to_finite() == bf;
    }
    return member ? ExtRat(Rational(0)) : ExtRat::infinity();
}

std::string ProductFn::name() const {
    return is_fitz_ ? "F_T(alpha=" + alpha_.str() + ")" : oplus_.name();
}

CertReport bc_test(const ProductFn& F, const std::vector<GraphPoint>& sample) {
    CertReport rep;
    rep.scenario = "bc_test";
    rep.config.emplace_back("function", F.name());
    int idx = 0;
    for (const auto& p : sample) {
        ++idx;
        Rational coupling = pair(p.first, p.second);
        ExtRat val = F.eval(p.first, p.second);
        rep.add(CheckEntry::relation_ext(
            "F >= coupling @" + std::to_string(idx), val, ">=", ExtRat(coupling),
            "candidate BC-function dominates the duality product"));
        ExtRat conj = F.conj_eval(p.second, p.first);
        rep.add(CheckEntry::relation_ext(
            "F* >= F @" + std::to_string(idx), conj, ">=", val,
            "bigger-conjugate inequality at the transposed point"));
    }
    return rep;
}

std::optional<Rational> fitz_divergence_evidence(const GraphSample& g, const FiniteVec& x,
                                                 const FiniteVec& xstar,
                                                 const Rational& threshold) {
    for (const auto& p : g.points) {
        Rational self = pair(p.first, p.second);
        if (self != 0) continue;  // scaling would pick up a quadratic term
        Rational b = fitz_bracket(p, x, xstar);
        if (b == 0) continue;
        // Bracket is linear along t*(a, a*); choose t with t*b > threshold.
        Rational t = (rat_abs(threshold) + 1) / rat_abs(b) + 1;
        if (b < 0) t = -t;
        GraphPoint scaled{
            std::visit([&](const auto& v) -> AnyVec { return t * v; }, p.first),
            std::visit([&](const auto& v) -> AnyVec { return t * v; }, p.second)};
        Rational val = fitz_bracket(scaled, x, xstar);
        if (val > threshold) return val;
    }
    return std::nullopt;
}

}  // namespace monocert
