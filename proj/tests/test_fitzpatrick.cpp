#include <doctest.h>

#include "monocert/fitzpatrick.hpp"
#include "monocert/rng.hpp"

using namespace monocert;

namespace {
const AlphaSpec kOnes = AlphaSpec::ones();
}

TEST_CASE("closed-form Fitzpatrick value of the skew operator") {
    FiniteVec e1 = FiniteVec::unit(1);
    CHECK(fitz_skew_exact(kOnes, -e1, e1).value == ExtRat(Rational(0)));  // A e_1 = e_1
    CHECK(fitz_skew_exact(kOnes, FiniteVec{}, FiniteVec{}).value == ExtRat(Rational(0)));
    CHECK(fitz_skew_exact(kOnes, e1, e1).value == ExtRat::infinity());
    CHECK(fitz_skew_exact(kOnes, e1, e1).exactness == FitzValue::Exactness::ClosedForm);
}

TEST_CASE("sampled lower bound: soundness, graph values, monotonicity") {
    GraphSample g = graph_T_alpha(kOnes, 4);
    Rng rng(43);
    for (int i = 0; i < 25; ++i) {
        FiniteVec xs = rng.finite_vec(4);
        FiniteVec x = -apply_A_alpha(kOnes, xs);
        FitzValue lb = fitz_sampled_lb(g, x, xs);
        FitzValue exact = fitz_skew_exact(kOnes, x, xs);
        CHECK(ext_ge(exact.value, lb.value));  // lower-bound soundness
        CHECK(lb.exactness == FitzValue::Exactness::LowerBound);
    }
    // on graph points both the bracket maximum and the coupling vanish
    for (const auto& p : g.points) {
        const FiniteVec& a = std::get<FiniteVec>(p.first);
        const FiniteVec& as = std::get<FiniteVec>(p.second);
        CHECK(fitz_sampled_lb(g, a, as).value == ExtRat(Rational(0)));
        CHECK(pair(a, as) == 0);
    }
    // (0,0) against a monotone sample through the origin
    CHECK(fitz_sampled_lb(g, FiniteVec{}, FiniteVec{}).value == ExtRat(Rational(0)));

    // enlarging the sample never decreases the bound
    GraphSample small = graph_T_alpha(kOnes, 4, /*pairwise_sums=*/false);
    FiniteVec e1 = FiniteVec::unit(1);
    GraphSample large = small;
    large.points.push_back(graph_T_alpha(kOnes, 4).scaled(Rational(3)).points.back());
    CHECK(ext_ge(fitz_sampled_lb(large, e1, e1).value, fitz_sampled_lb(small, e1, e1).value));
}

TEST_CASE("divergence evidence for (e1, e1) scales past any threshold") {
    GraphSample g = graph_T_alpha(kOnes, 3);
    FiniteVec e1 = FiniteVec::unit(1);
    for (long m : {100L, 1000000L}) {
        auto v = fitz_divergence_evidence(g, e1, e1, Rational(m));
        REQUIRE(v.has_value());
        CHECK(*v > m);
    }
    // members have identically zero brackets: no evidence exists
    FiniteVec xs = FiniteVec::unit(1) - FiniteVec::unit(2);
    FiniteVec x = -apply_A_alpha(kOnes, xs);
    CHECK(!fitz_divergence_evidence(g, x, xs, Rational(1)).has_value());
}

TEST_CASE("bc_test: table-backed product function passes both inequalities") {
    ProductFn F = ProductFn::from_oplus(
        oplus(ConvexFnTag::sup_norm(), ConvexFnTag::indicator_ball_l1()));
    FiniteVec e1 = FiniteVec::unit(1);
    std::vector<GraphPoint> sample = {
        {AnyVec(e1), AnyVec(e1)},
        {AnyVec(FiniteVec{}), AnyVec(FiniteVec{})},
        {AnyVec(Rational(2) * e1), AnyVec(rat(1, 2) * e1)},
    };
    CertReport rep = bc_test(F, sample);
    CHECK(rep.all_pass());
    // the (e1, e1) point sits at Fenchel-Young equality: F = <.,.> = 1
    CHECK(F.eval(AnyVec(e1), AnyVec(e1)) == ExtRat(Rational(1)));
    CHECK(F.conj_eval(AnyVec(e1), AnyVec(e1)) == ExtRat(Rational(1)));
}

TEST_CASE("bc_test: closed-form Fitzpatrick function is a BC-function on C") {
    ProductFn F = ProductFn::fitz_skew(kOnes);
    Rng rng(47);
    std::vector<GraphPoint> sample;
    for (int i = 0; i < 10; ++i) {
        FiniteVec xs = rng.finite_vec(5);
        sample.push_back({AnyVec(-apply_A_alpha(kOnes, xs)), AnyVec(xs)});
    }
    sample.push_back({AnyVec(FiniteVec{}), AnyVec(FiniteVec{})});
    CertReport rep = bc_test(F, sample);
    CHECK(rep.all_pass());
    // spot value: on C the function vanishes and dominates the coupling
    FiniteVec e1 = FiniteVec::unit(1);
    CHECK(F.eval(AnyVec(-apply_A_alpha(kOnes, e1)), AnyVec(e1)) == ExtRat(Rational(0)));
    CHECK(pair(-apply_A_alpha(kOnes, e1), e1) == -1);
}

TEST_CASE("conjugate of the Fitzpatrick indicator is supported on the adjoint graph") {
    ProductFn F = ProductFn::fitz_skew(kOnes);
    FiniteVec e1 = FiniteVec::unit(1);
    // (x*, A* x*) lies in the annihilator: conjugate value 0
    CHECK(F.conj_eval(AnyVec(e1), AnyVec(adjoint_A_alpha(kOnes, e1))) == ExtRat(Rational(0)));
    // anything else is +inf
    CHECK(F.conj_eval(AnyVec(e1), AnyVec(EventualVec::zero(kOnes))) == ExtRat::infinity());
    CHECK(F.conj_eval(AnyVec(e1), AnyVec(e1)) == ExtRat::infinity());
}
