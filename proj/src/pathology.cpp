#include "monocert/pathology.hpp"

#include <stdexcept>

#include "monocert/simplex.hpp"

namespace monocert {

namespace {

Rational coupling_with_offset(const GraphPoint& p, const AnyVec& x, const FiniteVec& xstar) {
    // <x - a, x* - a*> expanded so each pairing has one finite side.
    return pair(x, AnyVec(xstar)) - pair(x, p.second) - pair(p.first, AnyVec(xstar)) +
           pair(p.first, p.second);
}

Rational ni_bracket(const GraphPoint& p, const WitnessPoint& w) {
    // <a, x*> + <a*, x**> - <a, a*>
    return pair(p.first, AnyVec(w.x_star)) + pair(p.second, w.x_bidual) -
           pair(p.first, p.second);
}

// Skewness of the whole span: <a_i, a*_j> + <a_j, a*_i> = 0 for all i <= j.
bool span_is_skew(const GraphSample& g) {
    for (size_t i = 0; i < g.points.size(); ++i) {
        for (size_t j = i; j < g.points.size(); ++j) {
            Rational cross = pair(g.points[i].first, g.points[j].second) +
                             pair(g.points[j].first, g.points[i].second);
            if (cross != 0) return false;
        }
    }
    return true;
}

}  // namespace

Rational mono_related_min(const GraphSample& g, const AnyVec& x, const FiniteVec& xstar) {
    if (g.points.empty()) throw std::invalid_argument("mono_related_min: empty sample");
    Rational best = coupling_with_offset(g.points[0], x, xstar);
    for (size_t i = 1; i < g.points.size(); ++i)
        best = std::min(best, coupling_with_offset(g.points[i], x, xstar));
    return best;
}

PhelpsSimonsResult phelps_simons_check(const GraphSample& g, const AnyVec& x,
                                       const FiniteVec& xstar) {
    PhelpsSimonsResult res{true, std::nullopt, Rational(0)};
    Rational xx = pair(x, AnyVec(xstar));
    if (xx < 0) {
        res.pass = false;
        res.worst_margin = -xx;
    }
    for (const auto& p : g.points) {
        Rational b = pair(AnyVec(x), p.second) + pair(p.first, AnyVec(xstar));
        Rational lhs = b * b;
        Rational rhs = 4 * xx * pair(p.first, p.second);
        if (lhs > rhs) {
            Rational margin = lhs - rhs;
            if (!res.worst || margin > res.worst_margin) {
                res.worst = p;
                res.worst_margin = margin;
            }
            res.pass = false;
        }
    }
    return res;
}

NiGapResult ni_gap(const GraphSample& g, const WitnessPoint& w) {
    NiGapResult res{false, false, Rational(0), Rational(0)};
    bool sampled_any = false;
    for (const auto& p : g.points) {
        Rational b = ni_bracket(p, w);
        if (!sampled_any || b > res.sampled_sup) res.sampled_sup = b;
        sampled_any = true;
    }
    if (!sampled_any) throw std::invalid_argument("ni_gap: empty sample");

    if (!span_is_skew(g)) {
        // Not a subspace graph with vanishing products; only the sampled
        // lower bound on the sup is available.
        res.exact = false;
        return res;
    }
    // On a skew span the bracket is linear in (a, a*): zero on every spanning
    // point means zero on the span; a nonzero value scales without bound.
    for (const auto& p : g.points) {
        if (ni_bracket(p, w) != 0) {
            res.sup_unbounded = true;
            res.exact = true;
            return res;
        }
    }
    res.exact = true;
    res.gap = pair(w.x_bidual, AnyVec(w.x_star));
    return res;
}

BrWitness br_witness_check(const AlphaSpec& alpha, const FiniteVec& zstar, int N) {
    EventualVec alpha_vec = EventualVec::multiple_of_alpha(Rational(1), alpha);
    Rational s = pair(zstar, alpha_vec);
    if (s == 0)
        throw std::invalid_argument("br_witness_check: <alpha, z*> = 0 (no failure expected)");
    if (N < 2) throw std::invalid_argument("br_witness_check: N must be >= 2");

    BrWitness out{Rational(0), Rational(0), {}};
    out.fragment.scenario = "br_witness";
    out.fragment.config.emplace_back("alpha", alpha.str());
    out.fragment.config.emplace_back("zstar", zstar.str());
    out.fragment.config.emplace_back("N", std::to_string(N));

    // (a) inf over the span of <-A z* - a, z* - a*>. The cross terms are
    // certified zero on the basis, so the infimum collapses to the constant
    // <-A z*, z*> = -<alpha, z*>^2.
    GraphSample g = graph_T_alpha(alpha, N, /*pairwise_sums=*/false);
    FiniteVec minus_Az = -apply_A_alpha(alpha, zstar);
    bool cross_ok = span_is_skew(g);
    for (const auto& p : g.points) {
        Rational cross = pair(AnyVec(minus_Az), p.second) + pair(p.first, AnyVec(zstar));
        if (cross != 0) cross_ok = false;
    }
    out.fragment.add(CheckEntry::boolean(
        "coupling cross terms vanish on basis", cross_ok,
        "skew span makes the coupling constant along the graph"));
    out.inf_coupling = pair(minus_Az, zstar);
    out.fragment.add(CheckEntry::relation(
        "inf coupling", out.inf_coupling, "=", -(s * s),
        "infimum of <-Az*-a, z*-a*> over the truncated graph equals -<alpha,z*>^2"));

    // (b) l^1 distance from z* to {x* : supp in [1..N], <alpha, x*> = 0}:
    //   min sum(p_i + q_i)  s.t.  v_i + p_i - q_i = z*_i, <alpha, v> = 0,
    // v supported on [1..N], p, q >= 0 on [1..M].
    int M = std::max(N, zstar.max_support());
    size_t nv = static_cast<size_t>(N), np = static_cast<size_t>(M);
    size_t total = 2 * nv + 2 * np;  // v split into v+ - v-
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b, c(total, Rational(0));
    for (size_t i = 0; i < np; ++i) {
        std::vector<Rational> row(total, Rational(0));
        if (i < nv) {
            row[i] = 1;
            row[nv + i] = -1;
        }
        row[2 * nv + i] = 1;
        row[2 * nv + np + i] = -1;
        A.push_back(std::move(row));
        b.push_back(zstar.at(static_cast<int>(i) + 1));
    }
    {
        std::vector<Rational> row(total, Rational(0));
        for (size_t i = 0; i < nv; ++i) {
            row[i] = alpha.at(static_cast<int>(i) + 1);
            row[nv + i] = -alpha.at(static_cast<int>(i) + 1);
        }
        A.push_back(std::move(row));
        b.push_back(Rational(0));
    }
    for (size_t i = 0; i < 2 * np; ++i) c[2 * nv + i] = 1;
    LpResult lp = lp_solve_eq(std::move(A), std::move(b), std::move(c));
    if (lp.status != LpResult::Status::Optimal)
        throw std::runtime_error("br_witness_check: distance LP did not solve");
    out.range_distance = lp.objective;
    out.fragment.add(CheckEntry::relation(
        "l1 distance from z* to range span", out.range_distance, ">", Rational(0),
        "z* stays at positive l^1 distance from the truncated range"));
    out.fragment.note(
        "finite coupling infimum plus positive range distance contradicts the "
        "Brondsted-Rockafellar property for the truncated witness family");
    return out;
}

AdjointWitness adjoint_nonmono_witness(const AlphaSpec& alpha) {
    FiniteVec e1 = FiniteVec::unit(1);
    EventualVec first = apply_S_alpha(alpha, e1) -
                        EventualVec::multiple_of_alpha(Rational(1), alpha);
    AdjointWitness w{{AnyVec(first), AnyVec(e1)},
                     {AnyVec(EventualVec::zero(alpha)), AnyVec(FiniteVec{})},
                     Rational(0)};
    w.product = pair(first, e1);
    return w;
}

Rational quadratic_gap(const Rational& a) { return Rational(1) - a * a / 4; }

Rational quadratic_grid_min(const Rational& a, const Rational& lo, const Rational& hi,
                            const Rational& step) {
    if (step <= 0 || hi < lo) throw std::invalid_argument("bad grid");
    Rational best;
    bool have = false;
    for (Rational t = lo; t <= hi; t += step) {
        Rational v = t * t - a * t + 1;
        if (!have || v < best) {
            best = v;
            have = true;
        }
    }
    return best;
}

Rational nonuniqueness_product(const Rational& a1, const Rational& a2,
                               const Rational& pairing_val) {
    if (!(0 < a1 && a1 < a2 && a2 < 2))
        throw std::invalid_argument("nonuniqueness_product: need 0 < a1 < a2 < 2");
    if (pairing_val < 1)
        throw std::invalid_argument("nonuniqueness_product: pairing value must be >= 1");
    return (a1 - a2) * (Rational(1) / a1 - Rational(1) / a2) * pairing_val;
}

CertReport sum_ni_witness(const AlphaSpec& alpha, const FiniteVec& x0star, int N) {
    CertReport rep;
    rep.scenario = "sum_ni_witness";
    rep.config.emplace_back("alpha", alpha.str());
    rep.config.emplace_back("x0star", x0star.str());
    rep.config.emplace_back("N", std::to_string(N));

    EventualVec alpha_vec = EventualVec::multiple_of_alpha(Rational(1), alpha);
    Rational s = pair(x0star, alpha_vec);
    if (s == 0)
        throw std::invalid_argument("sum_ni_witness: <alpha, x0*> = 0 gives zero slack");
    Rational eps0 = s * s / 2;

    EventualVec w = adjoint_A_alpha(alpha, x0star);
    Rational sup = norm_sup(w);

    // Attaining coordinate: first prefix index with |w_n| = ||w||, otherwise
    // the first tail index (any tail index works; one is materialized).
    int m = 0;
    for (int n = 1; n <= w.prefix_len(); ++n) {
        if (rat_abs(w.at(n)) == sup) {
            m = n;
            break;
        }
    }
    bool tail_attained = false;
    if (m == 0) {
        int probe = w.prefix_len() + 1;
        while (rat_abs(w.at(probe)) != sup) ++probe;  // alpha prefix may defer it
        m = probe;
        tail_attained = true;
    }
    if (m > N) {
        rep.note("sup attained only beyond the truncation (index " + std::to_string(m) +
                 "); materializing it, any tail index works");
    } else if (tail_attained) {
        rep.note("sup attained on the tail pattern; index " + std::to_string(m) +
                 " materialized, any tail index works");
    }

    FiniteVec y0 = (rat_sign(w.at(m)) >= 0 ? sup : -sup) * FiniteVec::unit(m);
    FiniteVec z0 = y0 + x0star;

    // f = 1/2 ||.||^2: f**(w) = 1/2 ||w||_*^2, f*(y*) = 1/2 ||y*||_1^2.
    Rational f_bidual_w = sup * sup / 2;
    Rational f_conj_y0 = norm_l1(y0) * norm_l1(y0) / 2;
    Rational coupling_wy = pair(y0, w);

    rep.add(CheckEntry::relation(
        "f**(A*x0*) + f*(y0*) < <A*x0*, y0*> + 2 eps0", f_bidual_w + f_conj_y0, "<",
        coupling_wy + 2 * eps0,
        "eps-subgradient step realized by the norming coordinate functional"));

    FiniteVec diff = z0 - x0star;
    Rational f_conj_diff = norm_l1(diff) * norm_l1(diff) / 2;
    Rational coupling_wz = pair(z0, w);
    rep.add(CheckEntry::relation(
        "f**(A*x0*) + f*(z0*-x0*) < <A*x0*, z0*>", f_bidual_w + f_conj_diff, "<", coupling_wz,
        "strict conjugate-sum inequality certifying the sum operator misses type (NI)"));

    rep.add(CheckEntry::relation(
        "<A*x0*, x0*> = 2 eps0", pair(x0star, w), "=", 2 * eps0,
        "quadratic identity <A x*, x*> = <alpha, x*>^2 transported through the adjoint"));
    return rep;
}

}  // namespace monocert
