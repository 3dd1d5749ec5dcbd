#include <doctest.h>

#include "monocert/james.hpp"
#include "monocert/rng.hpp"

using namespace monocert;

TEST_CASE("james norm squared: frozen values from the enumeration oracle") {
    CHECK(james_norm_sq(FiniteVec::unit(1), 1) == 1);
    // (1,-1): chain 1,2,3 gives 4 + 1 = 5
    FiniteVec v = FiniteVec::from_dense({Rational(1), Rational(-1)});
    CHECK(james_norm_sq(v, 2) == 5);
    // (1,2,1): chain 1,2,4 through the appended zero gives 1 + 4 = 5
    FiniteVec w = FiniteVec::from_dense({Rational(1), Rational(2), Rational(1)});
    CHECK(james_norm_sq(w, 3) == 5);
    CHECK(james_norm_sq(FiniteVec{}, 3) == 0);

    CHECK(james_norm_sq_enum(FiniteVec::unit(1), 1) == 1);
    CHECK(james_norm_sq_enum(v, 2) == 5);
    CHECK(james_norm_sq_enum(w, 3) == 5);

    CHECK_THROWS_AS(james_norm_sq(FiniteVec::unit(5), 3), std::invalid_argument);
}

TEST_CASE("james DP equals exhaustive enumeration on random vectors") {
    Rng rng(11);
    for (int N = 2; N <= 8; ++N) {
        for (int i = 0; i < 40; ++i) {
            FiniteVec x = rng.finite_vec(N, 6, 3);
            CHECK(james_norm_sq(x, N) == james_norm_sq_enum(x, N));
        }
    }
}

TEST_CASE("james norm squared is 2-homogeneous and chain is consistent") {
    Rng rng(3);
    for (int i = 0; i < 30; ++i) {
        FiniteVec x = rng.finite_vec(7, 5, 2);
        Rational lam = rng.rational(4, 3);
        CHECK(james_norm_sq(lam * x, 7) == lam * lam * james_norm_sq(x, 7));

        JamesChain jc = james_norm_sq_chain(x, 7);
        Rational chain_val(0);
        for (size_t k = 0; k + 1 < jc.chain.size(); ++k) {
            Rational a = jc.chain[k] <= 7 ? x.at(jc.chain[k]) : Rational(0);
            Rational b = jc.chain[k + 1] <= 7 ? x.at(jc.chain[k + 1]) : Rational(0);
            chain_val += (a - b) * (a - b);
        }
        CHECK(chain_val == jc.value_sq);
    }
}

TEST_CASE("james dual norm brackets: frozen grid values at N = 3") {
    FiniteVec e1 = FiniteVec::unit(1), e2 = FiniteVec::unit(2);
    Rational tol = rat(1, 10000);
    struct Case {
        FiniteVec f;
        Rational expected;
    } cases[] = {{e1, Rational(1)}, {e1 + e2, Rational(2)}, {e1 - e2, Rational(1)}};
    for (const auto& c : cases) {
        JamesDualBracket b = james_dual_norm(c.f, tol);
        CHECK(b.converged);
        CHECK(b.hi - b.lo <= tol);
        CHECK(b.lo <= c.expected);
        CHECK(c.expected <= b.hi);
        Rational grid = james_dual_grid_opt(c.f, rat(1, 4));
        CHECK(grid == c.expected);
        CHECK(b.lo <= grid);
        CHECK(grid <= b.hi);
    }
}

TEST_CASE("james dual norm rejects nonpositive tolerance") {
    CHECK_THROWS_AS(james_dual_norm(FiniteVec::unit(1), Rational(0)), std::invalid_argument);
}

TEST_CASE("james dual norm reports non-convergence with its best bracket") {
    // The first LP relaxation maximizer (1, -1) has squared norm 5 > 1, so a
    // one-iteration cap cannot close the bracket.
    FiniteVec f = FiniteVec::unit(1) - FiniteVec::unit(2);
    JamesDualBracket b = james_dual_norm(f, rat(1, 10000), /*max_iterations=*/1);
    CHECK(!b.converged);
    CHECK(b.iterations == 1);
    CHECK(b.lo <= 1);
    CHECK(b.hi >= 1);  // bracket still valid, just wide
    CHECK(b.hi - b.lo > rat(1, 10000));
}
