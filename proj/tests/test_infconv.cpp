#include <doctest.h>

#include <cmath>
#include <string>

#include "monocert/infconv.hpp"
#include "monocert/operators.hpp"
#include "monocert/rng.hpp"

using namespace monocert;

namespace {
const AlphaSpec kOnes = AlphaSpec::ones();
}

TEST_CASE("box1: indicator collapses the infimum to an exact evaluation") {
    FiniteVec e1 = FiniteVec::unit(1);
    // u must equal -A x*, so the value is f(x + A x*) + f*(x*)
    CHECK(box1_structured(kOnes, ConvexFnTag::sup_norm(), AnyVec(FiniteVec{}), e1) ==
          ExtRat(Rational(1)));
    CHECK(box1_structured(kOnes, ConvexFnTag::sup_norm(),
                          AnyVec(-apply_A_alpha(kOnes, e1)), e1) == ExtRat(Rational(0)));

    Rng rng(61);
    for (auto tag : {ConvexFnTag::sup_norm(), ConvexFnTag::half_sup_sq()}) {
        for (int i = 0; i < 30; ++i) {
            FiniteVec x = rng.finite_vec(6), xs = rng.finite_vec(6);
            ExtRat v = box1_structured(kOnes, tag, AnyVec(x), xs);
            CHECK(ext_ge(v, ExtRat(pair(x, xs))));  // dominates the coupling
        }
    }
}

TEST_CASE("box2: affine solve and frozen values") {
    FiniteVec e1 = FiniteVec::unit(1);
    CHECK(box2_structured(kOnes, ConvexFnTag::half_sup_sq(), FiniteVec{}, FiniteVec{}) ==
          ExtRat(Rational(0)));
    // x = -A e_1 forces v = 0: value 1/2 ||A e_1||^2 + 0 = 1/2
    CHECK(box2_structured(kOnes, ConvexFnTag::half_sup_sq(), -apply_A_alpha(kOnes, e1), e1) ==
          ExtRat(rat(1, 2)));

    Rng rng(67);
    for (int i = 0; i < 30; ++i) {
        // build a feasible x = -A u so the indicator admits it
        FiniteVec u = rng.finite_vec(5), xs = rng.finite_vec(5);
        FiniteVec x = -apply_A_alpha(kOnes, u);
        ExtRat v = box2_structured(kOnes, ConvexFnTag::half_sup_sq(), x, xs);
        REQUIRE(v.is_finite());
        CHECK(v.value() >= pair(x, xs));
        // the reduction recovers exactly f(x) + f*(x* - u)
        Rational expect = norm_sup(x) * norm_sup(x) / 2 +
                          norm_l1(xs - u) * norm_l1(xs - u) / 2;
        CHECK(v.value() == expect);
    }

    // alpha with a zero coordinate: unsatisfiable row gives +inf
    AlphaSpec gap = AlphaSpec::parse("0;1");
    CHECK(box2_structured(gap, ConvexFnTag::half_sup_sq(), FiniteVec::unit(1), FiniteVec{}) ==
          ExtRat::infinity());
    // ...while a free coordinate is absorbed at v = 0
    ExtRat free_case =
        box2_structured(gap, ConvexFnTag::half_sup_sq(), FiniteVec{}, FiniteVec::unit(1));
    CHECK(free_case == ExtRat(Rational(0)));
}

TEST_CASE("dual formula brute force: three specs agree") {
    ScalarPiece half{ScalarPiece::Kind::Square, 0.5};
    ScalarPiece full{ScalarPiece::Kind::Square, 1.0};
    ScalarPiece ind{ScalarPiece::Kind::IndicatorZero, 0.0};
    SeparableSpec sym{half, half, "1/2 x^2 (+) 1/2 y^2"};
    SeparableSpec quad{full, full, "x^2 (+) y^2"};
    SeparableSpec zero{ind, ind, "indicator of {0}"};

    DualFormulaResult a = dual_formula_bruteforce(sym, sym, 4.0, 1e-5, 1e-6);
    CHECK(a.pass);
    CHECK(a.max_abs_gap <= 1e-6);
    DualFormulaResult b = dual_formula_bruteforce(sym, zero, 4.0, 1e-5, 1e-6);
    CHECK(b.pass);  // indicator absorption: box collapses to a shift
    DualFormulaResult c = dual_formula_bruteforce(quad, sym, 4.0, 1e-5, 1e-6);
    CHECK(c.pass);

    // On a fully symmetric spec the two split formulas give matching values
    // at coordinate-swapped dual points: box2 at (1,0) equals box1 at (0,1).
    // The exact dyadic sides are recorded in the anchor as "sides A and B".
    auto side_of = [&](const std::string& prefix) {
        for (const auto& e : a.fragment.checks) {
            if (e.name.rfind(prefix, 0) != 0) continue;
            auto at = e.anchor.find("sides ");
            auto sep = e.anchor.find(" and ", at);
            REQUIRE(at != std::string::npos);
            return rat_parse(e.anchor.substr(at + 6, sep - at - 6));
        }
        FAIL("entry not found: " << prefix);
        return Rational(0);
    };
    Rational tol_r(1, 1000000);
    CHECK(rat_abs(side_of("box2 conjugate vs min-split gap @(1.000000,0.000000)") -
                  side_of("box1 conjugate vs min-split gap @(0.000000,1.000000)")) <= tol_r);
    CHECK(rat_abs(side_of("box2 conjugate vs min-split gap @(1.000000,1.000000)") -
                  side_of("box1 conjugate vs min-split gap @(1.000000,1.000000)")) <= tol_r);
}

TEST_CASE("bc_fail_a2: frozen inequality 2 < 3 at alpha = e, i0 = 1") {
    CertReport rep = bc_fail_a2(kOnes, 1);
    CHECK(rep.all_pass());
    bool found = false;
    for (const auto& c : rep.checks) {
        if (c.name.rfind("f*(v0*) + f**", 0) == 0) {
            CHECK(c.lhs == "2");
            CHECK(c.rhs == "3");
            found = true;
        }
    }
    CHECK(found);

    // i0 = 2: residual (0, 2, -2, -2, ...) still has norm 2 < 3
    CertReport shifted = bc_fail_a2(kOnes, 2);
    CHECK(shifted.all_pass());

    // alpha = (2, 1, 1, ...): threshold 3 ||alpha||^2 = 12, strict again
    CertReport big = bc_fail_a2(AlphaSpec::parse("2;1"), 1);
    CHECK(big.all_pass());
    for (const auto& c : big.checks)
        if (c.name.rfind("f*(v0*) + f**", 0) == 0) CHECK(c.rhs == "12");

    CHECK_THROWS_AS(bc_fail_a2(AlphaSpec::parse("0;1"), 1), std::invalid_argument);
}

TEST_CASE("bc_fail_a2 is strict across a randomized rational family") {
    Rng rng(71);
    for (int i = 0; i < 25; ++i) {
        std::vector<Rational> prefix;
        int len = static_cast<int>(rng.below(3));
        for (int k = 0; k < len; ++k) prefix.push_back(rng.rational(3, 2));
        Rational tail = rng.rational(3, 2);
        if (tail == 0) tail = Rational(1);
        AlphaSpec alpha(prefix, tail);
        int i0 = 1;
        while (alpha.at(i0) == 0) ++i0;
        CertReport rep = bc_fail_a2(alpha, i0);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("bc_fail_a4: frozen inequality 5/8 < 3/4 and preconditions") {
    CertReport rep = bc_fail_a4(kOnes, 1);
    CHECK(rep.all_pass());
    bool found = false;
    for (const auto& c : rep.checks) {
        if (c.name.rfind("1/2||v1*||", 0) == 0) {
            CHECK(c.lhs == "5/8");
            CHECK(c.rhs == "3/4");
            found = true;
        }
    }
    CHECK(found);

    // symmetry of alpha = e: any coordinate works
    CHECK(bc_fail_a4(kOnes, 3).all_pass());

    // alpha_1^2 = 49/100 < 1/2: rejected
    CHECK_THROWS_AS(bc_fail_a4(AlphaSpec::parse("7/10;7/10"), 1), std::invalid_argument);
    // sup norm above 1: rejected
    CHECK_THROWS_AS(bc_fail_a4(AlphaSpec::parse("2;1"), 1), std::invalid_argument);
    // nontrivial admissible alpha
    CHECK(bc_fail_a4(AlphaSpec::parse("9/10,3/4;1/2"), 1).all_pass());
}
