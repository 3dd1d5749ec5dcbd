// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is pinned here, in code.

#include <chrono>
#include <iostream>
#include <string>

#include "monocert/fitzpatrick.hpp"
#include "monocert/infconv.hpp"
#include "monocert/james.hpp"
#include "monocert/operators.hpp"
#include "monocert/pathology.hpp"
#include "monocert/rng.hpp"
#include "monocert/scenarios.hpp"

using namespace monocert;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

EventualVec alpha_vec(const AlphaSpec& a) {
    return EventualVec::multiple_of_alpha(Rational(1), a);
}

void criterion_1_and_2() {
    auto t0 = std::chrono::steady_clock::now();
    bool quad_ok = true, skew_ok = true;
    for (const char* spec : {"e", "2;1", "1;-1"}) {
        AlphaSpec alpha = AlphaSpec::parse(spec);
        Rng rng(20110806);
        for (int i = 0; i < 1000; ++i) {
            FiniteVec xs = rng.finite_vec(20);
            Rational s = pair(xs, alpha_vec(alpha));
            if (pair(apply_A_alpha(alpha, xs), xs) != s * s) quad_ok = false;
            if (pair(apply_S_alpha(alpha, xs), xs) != 0) skew_ok = false;
            if (pair(apply_G(xs), xs) != 0) skew_ok = false;
        }
    }
    double dt = seconds_since(t0);
    report(1, "quadratic identity, 1000 seeded functionals x 3 alphas, tolerance 0",
           quad_ok && dt < 5.0, std::to_string(dt) + " s");
    report(2, "skewness of S and G on the same family, tolerance 0", skew_ok);
}

void criterion_3() {
    bool ok = true;
    AlphaSpec e = AlphaSpec::ones();
    for (int N = 2; N <= 20; ++N) {
        auto basis = kernel_basis(e, N);
        Rng rng(300 + N);
        std::vector<FiniteVec> inputs;
        for (int k = 1; k <= N; ++k) inputs.push_back(FiniteVec::unit(k));
        for (int i = 0; i < 3; ++i) inputs.push_back(rng.finite_vec(N));
        for (const auto& xs : inputs) {
            FiniteVec x = -apply_A_alpha(e, xs);
            if (!(fitz_skew_exact(e, x, xs).value == ExtRat(Rational(0)))) ok = false;
            for (const auto& v : basis) {
                Rational bracket = pair(x, v) + pair(-apply_A_alpha(e, v), xs);
                if (bracket != 0) ok = false;
            }
        }
    }
    // divergence evidence for (e_1, e_1)
    GraphSample g = graph_T_alpha(e, 6);
    Rational threshold(1000000);
    auto evidence = fitz_divergence_evidence(g, FiniteVec::unit(1), FiniteVec::unit(1), threshold);
    bool diverges = evidence.has_value() && *evidence > threshold;
    report(3, "Fitzpatrick indicator: zero brackets on kernel bases N=2..20, divergence off C",
           ok && diverges,
           diverges ? "scaled sample value " + rat_str(*evidence) + " > 10^6" : "no divergence");
}

void criterion_4() {
    bool ok = true;
    AlphaSpec e = AlphaSpec::ones();
    FiniteVec e1 = FiniteVec::unit(1);
    for (int N = 2; N <= 20; ++N) {
        GraphSample g = graph_T_alpha(e, N);
        WitnessPoint w{AnyVec(adjoint_A_alpha(e, e1)), e1, "adjoint image of e_1"};
        NiGapResult r = ni_gap(g, w);
        if (!(r.exact && !r.sup_unbounded && r.gap == 1)) ok = false;
    }
    report(4, "negative-infimum gap = 1 exactly at (A*e_1, e_1) for N = 2..20", ok);
}

void criterion_5() {
    AdjointWitness w = adjoint_nonmono_witness(AlphaSpec::ones());
    report(5, "adjoint non-monotonicity witness product = -1 exactly", w.product == -1);
}

void criterion_6() {
    bool ok = true;
    for (int N = 2; N <= 20; ++N) {
        BrWitness w = br_witness_check(AlphaSpec::ones(), FiniteVec::unit(1), N);
        if (!(w.inf_coupling == -1 && w.range_distance == 1)) ok = false;
    }
    report(6, "coupling infimum = -1 and l^1 range distance = 1 via exact LP, N = 2..20", ok);
}

void criterion_7() {
    CertReport a2 = bc_fail_a2(AlphaSpec::ones(), 1);
    bool a2_ok = a2.all_pass();
    std::string a2_vals;
    for (const auto& c : a2.checks)
        if (c.name.rfind("f*(v0*) + f**", 0) == 0) {
            a2_vals = c.lhs + " < " + c.rhs;
            a2_ok = a2_ok && c.lhs == "2" && c.rhs == "3";
        }
    CertReport a4 = bc_fail_a4(AlphaSpec::ones(), 1);
    bool a4_ok = a4.all_pass();
    std::string a4_vals;
    for (const auto& c : a4.checks)
        if (c.name.rfind("1/2||v1*||", 0) == 0) {
            a4_vals = c.lhs + " < " + c.rhs;
            a4_ok = a4_ok && c.lhs == "5/8" && c.rhs == "3/4";
        }
    report(7, "BC-failure counterexamples certify 2 < 3 and 5/8 < 3/4 exactly",
           a2_ok && a4_ok, a2_vals + "; " + a4_vals);
}

void criterion_8() {
    bool ok = quadratic_gap(Rational(1)) == rat(3, 4);
    for (const Rational& a : {rat(1, 2), Rational(1), rat(3, 2)}) {
        Rational grid = quadratic_grid_min(a, Rational(-2), Rational(2), rat(1, 1000));
        if (!(quadratic_gap(a) <= grid)) ok = false;
    }
    report(8, "quadratic gap: value 3/4 at a = 1; closed form <= 10^-3-step grid minimum", ok);
}

void criterion_9() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int N = 2; N <= 12; ++N) {
        Rng rng(900 + N);
        for (int i = 0; i < 100; ++i) {
            FiniteVec x = rng.finite_vec(N, 6, 3);
            if (james_norm_sq(x, N) != james_norm_sq_enum(x, N)) ok = false;
        }
    }
    double dt = seconds_since(t0);
    report(9, "James DP = exhaustive enumeration, 100 vectors per N = 2..12, exact",
           ok && dt < 30.0, std::to_string(dt) + " s");
}

void criterion_10() {
    Rational tol = rat(1, 10000);
    FiniteVec e1 = FiniteVec::unit(1), e2 = FiniteVec::unit(2);
    struct Case {
        FiniteVec f;
        Rational expected;
    } cases[] = {{e1, Rational(1)}, {e1 + e2, Rational(2)}, {e1 - e2, Rational(1)}};
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
        JamesDualBracket b = james_dual_norm(c.f, tol);
        Rational grid = james_dual_grid_opt(c.f, rat(1, 4));
        bool this_ok = b.converged && b.hi - b.lo <= tol && b.lo <= grid && grid <= b.hi &&
                       grid == c.expected;
        if (!this_ok) ok = false;
        detail += rat_str(grid) + " in [" + rat_str(b.lo) + ", " + rat_str(b.hi) + "] ";
    }
    report(10, "James dual-norm brackets contain grid optima 1, 2, 1; width <= 10^-4", ok,
           detail);
}

void criterion_11() {
    bool ok = true;
    Rng rng(1111);
    for (int i = 0; i < 200; ++i) {
        FiniteVec ys = rng.finite_vec(12);
        if (dual_gossez_plus_rank1(ys, 12).tail_coeff() != 0) ok = false;
    }
    EventualVec img = dual_gossez_plus_rank1(FiniteVec::unit(2), 5);
    bool frozen = img.has_zero_tail() &&
                  img.to_finite() == FiniteVec::from_dense({Rational(2), Rational(1)});
    report(11, "dual-side range: tail coefficient 0 for every finite y*; e_2* gives (2,1,0,...)",
           ok && frozen);
}

void criterion_12() {
    auto t0 = std::chrono::steady_clock::now();
    ScalarPiece half{ScalarPiece::Kind::Square, 0.5};
    ScalarPiece full{ScalarPiece::Kind::Square, 1.0};
    ScalarPiece ind{ScalarPiece::Kind::IndicatorZero, 0.0};
    SeparableSpec sym{half, half, "1/2 x^2 (+) 1/2 y^2"};
    SeparableSpec quad{full, full, "x^2 (+) y^2"};
    SeparableSpec zero{ind, ind, "indicator of {0}"};
    bool ok = dual_formula_bruteforce(sym, sym, 4.0, 1e-5, 1e-6).pass &&
              dual_formula_bruteforce(sym, zero, 4.0, 1e-5, 1e-6).pass &&
              dual_formula_bruteforce(quad, sym, 4.0, 1e-5, 1e-6).pass;
    double dt = seconds_since(t0);
    report(12, "partial inf-convolution conjugate formulas agree by brute force, tol 10^-6",
           ok && dt < 10.0, std::to_string(dt) + " s");
}

void criterion_13() {
    CertReport rep = sum_ni_witness(AlphaSpec::ones(), FiniteVec::unit(1), 5);
    bool ok = rep.all_pass();
    std::string vals;
    for (const auto& c : rep.checks)
        if (c.name.rfind("f**(A*x0*) + f*(z0*-x0*)", 0) == 0) {
            vals = c.lhs + " < " + c.rhs;
            ok = ok && c.lhs == "4" && c.rhs == "5";
        }
    report(13, "sum-operator witness chain 4 < 5 verified exactly", ok, vals);
}

void criterion_14() {
    bool ok = true;
    for (const auto& info : list_scenarios()) {
        ScenarioConfig cfg;
        cfg.scenario = info.name;
        cfg.seed = 7;
        std::string a = render_report(run_scenario(cfg), "json");
        std::string b = render_report(run_scenario(cfg), "json");
        std::string ma = render_report(run_scenario(cfg), "markdown");
        std::string mb = render_report(run_scenario(cfg), "markdown");
        if (a != b || ma != mb) {
            ok = false;
            std::cout << "  non-deterministic scenario: " << info.name << "\n";
        }
    }
    report(14, "byte-identical reports for identical (scenario, config, seed), all 14 scenarios",
           ok);
}

}  // namespace

int main() {
    criterion_1_and_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    criterion_14();
    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
}
