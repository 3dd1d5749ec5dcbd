#include "monocert/scenarios.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "monocert/convex.hpp"
#include "monocert/fitzpatrick.hpp"
#include "monocert/infconv.hpp"
#include "monocert/james.hpp"
#include "monocert/operators.hpp"
#include "monocert/pathology.hpp"
#include "monocert/rng.hpp"

namespace monocert {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

ScenarioConfig ScenarioConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    ScenarioConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line is not key = value: " + line);
        cfg.apply_key(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return cfg;
}

void ScenarioConfig::apply_key(const std::string& key, const std::string& value) {
    if (key == "scenario")
        scenario = value;
    else if (key == "alpha")
        alpha = AlphaSpec::parse(value);
    else if (key == "trunc")
        N = std::stoi(value);
    else if (key == "seed")
        seed = std::stoull(value);
    else if (key == "tol")
        tol = rat_parse(value);
    else if (key == "format")
        format = value;
    else if (key == "out")
        out = value;
    else
        throw std::runtime_error("unknown config key: " + key);
}

void ScenarioConfig::validate() const {
    if (N < 2) throw std::invalid_argument("trunc must be >= 2");
    if (tol <= 0) throw std::invalid_argument("tol must be > 0");
    if (format != "json" && format != "markdown")
        throw std::invalid_argument("format must be json or markdown");
}

const std::vector<ScenarioInfo>& list_scenarios() {
    static const std::vector<ScenarioInfo> catalogue = {
        {"quadratic-identity",
         "<A x*, x*> = <alpha, x*>^2 exactly on seeded random functionals"},
        {"skewness", "<S x*, x*> = 0 and <G x*, x*> = 0 exactly; S = A - P entrywise"},
        {"fitzpatrick-indicator",
         "Fitzpatrick function of the skew operator is the indicator of "
         "{(-A x*, x*)}; off the set, sampled values grow past any threshold"},
        {"ni-gap",
         "bidual witness (A* e_1, e_1) has graph supremum 0 and coupling "
         "alpha_1^2 > 0: the type-(NI) inequality fails at truncation"},
        {"br-failure",
         "coupling infimum at (-A z*, z*) is finite while z* keeps positive "
         "l^1 distance from the truncated range: Brondsted-Rockafellar fails"},
        {"adjoint-nonmonotone",
         "two adjoint graph points with negative monotonicity product"},
        {"bc-simons-a2",
         "sup-norm counterexample: the first-slot inf-convolution of the "
         "Fitzpatrick indicator with ||.|| (+) its conjugate is not a "
         "BC-function"},
        {"bc-simons-a4",
         "squared-norm counterexample under alpha_{i0}^2 > 1/2, "
         "||alpha|| <= 1: the inf-convolution is again not a BC-function"},
        {"sum-ni",
         "strict conjugate-sum chain certifying that the skew operator plus "
         "the duality map misses type (NI)"},
        {"james-norm", "chain dynamic program equals exhaustive enumeration"},
        {"james-dual-norm",
         "cutting-plane brackets for dual-norm values contain the grid optima"},
        {"dual-gossez-range",
         "rank-one-perturbed dual-side operator has range inside the basis "
         "span: the tail coefficient always vanishes"},
        {"dual-formula",
         "conjugates of partial inf-convolutions split as minima (checked by "
         "exhaustive grids in two dimensions)"},
        {"transport",
         "graph transport through an injective map preserves monotonicity "
         "products"},
    };
    return catalogue;
}

namespace {

using ScenarioFn = std::function<void(const ScenarioConfig&, CertReport&)>;

Rational alpha_pair(const ScenarioConfig& cfg, const FiniteVec& xstar) {
    return pair(xstar, EventualVec::multiple_of_alpha(Rational(1), cfg.alpha));
}

void scenario_quadratic_identity(const ScenarioConfig& cfg, CertReport& rep) {
    Rng rng(cfg.seed);
    const int count = 25;
    int support = std::min(cfg.N, 20);
    for (int i = 1; i <= count; ++i) {
        FiniteVec xs = rng.finite_vec(support);
        Rational lhs = pair(apply_A_alpha(cfg.alpha, xs), xs);
        Rational rhs = alpha_pair(cfg, xs);
        rep.add(CheckEntry::relation("<A x*, x*> = <alpha, x*>^2 @" + std::to_string(i), lhs,
                                     "=", rhs * rhs,
                                     "quadratic identity of the multiplier operator"));
    }
    // Decomposition A = P + S entrywise on a window.
    FiniteVec xs = rng.finite_vec(support);
    EventualVec sum = apply_P_alpha(cfg.alpha, xs) + apply_S_alpha(cfg.alpha, xs);
    EventualVec a = EventualVec::from_finite(apply_A_alpha(cfg.alpha, xs), cfg.alpha);
    rep.add(CheckEntry::serialized("A = P + S", a.str(), sum.str(),
                                   "symmetric/skew decomposition of the operator"));
}

void scenario_skewness(const ScenarioConfig& cfg, CertReport& rep) {
    Rng rng(cfg.seed);
    const int count = 25;
    int support = std::min(cfg.N, 20);
    for (int i = 1; i <= count; ++i) {
        FiniteVec xs = rng.finite_vec(support);
        rep.add(CheckEntry::relation("<S x*, x*> = 0 @" + std::to_string(i),
                                     pair(apply_S_alpha(cfg.alpha, xs), xs), "=", Rational(0),
                                     "skew part annihilates the quadratic form"));
        rep.add(CheckEntry::relation("<G x*, x*> = 0 @" + std::to_string(i),
                                     pair(apply_G(xs), xs), "=", Rational(0),
                                     "the skew sequence operator on l^1 is skew"));
    }
    FiniteVec xs = rng.finite_vec(support);
    rep.add(CheckEntry::serialized("G = S at alpha = e", apply_G(xs).str(),
                                   apply_S_alpha(AlphaSpec::ones(), xs).str(),
                                   "the classical skew operator is the constant-one instance"));
}

void scenario_fitzpatrick_indicator(const ScenarioConfig& cfg, CertReport& rep) {
    Rng rng(cfg.seed);
    auto basis = kernel_basis(cfg.alpha, cfg.N);
    for (int i = 1; i <= 5; ++i) {
        FiniteVec xs = rng.finite_vec(cfg.N);
        FiniteVec x = -apply_A_alpha(cfg.alpha, xs);
        FitzValue fv = fitz_skew_exact(cfg.alpha, x, xs);
        rep.add(CheckEntry::relation_ext("member value @" + std::to_string(i), fv.value, "=",
                                         ExtRat(Rational(0)),
                                         "indicator vanishes on the graph-defined set"));
        bool brackets_zero = true;
        for (const auto& v : basis) {
            Rational b = pair(x, v) + pair(-apply_A_alpha(cfg.alpha, v), xs);
            if (b != 0) brackets_zero = false;
        }
        rep.add(CheckEntry::boolean("brackets vanish on kernel basis @" + std::to_string(i),
                                    brackets_zero,
                                    "linear bracket zero on a spanning set is zero on the span"));
    }
    FiniteVec e1 = FiniteVec::unit(1);
    FitzValue off = fitz_skew_exact(cfg.alpha, e1, e1);
    rep.add(CheckEntry::relation_ext("non-member value", off.value, "=", ExtRat::infinity(),
                                     "indicator is +inf off the set"));
    // Domain strictly exceeds the graph: at the first coordinate k with
    // alpha_k != 0, the point (-A e_k, e_k) carries a finite value but e_k
    // is outside the kernel, so it is not a graph point.
    int k = 1;
    while (cfg.alpha.at(k) == 0) ++k;
    FiniteVec ek = FiniteVec::unit(k);
    rep.add(CheckEntry::relation_ext(
        "(-A e_k, e_k) in dom F_T", fitz_skew_exact(cfg.alpha, -apply_A_alpha(cfg.alpha, ek), ek).value,
        "=", ExtRat(Rational(0)), "finite value at a non-graph point (k = " + std::to_string(k) + ")"));
    rep.add(CheckEntry::relation(
        "(-A e_k, e_k) not in gra T",
        rat_abs(pair(ek, EventualVec::multiple_of_alpha(Rational(1), cfg.alpha))), ">",
        Rational(0),
        "nonzero kernel pairing keeps the point off the graph, so the domain of the "
        "Fitzpatrick function strictly exceeds the graph at truncation"));
    GraphSample g = graph_T_alpha(cfg.alpha, cfg.N);
    Rational threshold(1000000);
    auto evidence = fitz_divergence_evidence(g, e1, e1, threshold);
    if (evidence) {
        rep.add(CheckEntry::relation("scaled sample value exceeds threshold", *evidence, ">",
                                     threshold,
                                     "divergence evidence: sampled suprema grow without bound"));
    } else {
        rep.add(CheckEntry::error("scaled sample value exceeds threshold",
                                  "no nonzero bracket direction found",
                                  "divergence evidence expected off the set"));
    }
}

void scenario_ni_gap(const ScenarioConfig& cfg, CertReport& rep) {
    GraphSample g = graph_T_alpha(cfg.alpha, cfg.N);
    rep.note("graph sample: " + g.generator);
    FiniteVec e1 = FiniteVec::unit(1);
    WitnessPoint w{AnyVec(adjoint_A_alpha(cfg.alpha, e1)), e1, "adjoint image of e_1"};
    NiGapResult r = ni_gap(g, w);
    rep.add(CheckEntry::boolean("bracket certified zero on spanning set", r.exact && !r.sup_unbounded,
                                "graph supremum collapses to 0 on the skew span"));
    Rational a1 = cfg.alpha.at(1);
    rep.add(CheckEntry::relation("gap", r.gap, "=", a1 * a1,
                                 "negative-infimum gap equals alpha_1^2 at every truncation"));
    rep.add(CheckEntry::relation("gap positive", r.gap, ">", Rational(0),
                                 "positive gap is the truncated trace of failing type (NI)"));
    rep.note("a positive gap at a spanning-certified witness rules out the type-(NI) "
             "inequality for the truncated graph family");
}

void scenario_br_failure(const ScenarioConfig& cfg, CertReport& rep) {
    BrWitness w = br_witness_check(cfg.alpha, FiniteVec::unit(1), cfg.N);
    for (auto& c : w.fragment.checks) rep.add(c);
    for (auto& n : w.fragment.notes) rep.note(n);
    Rational a1 = cfg.alpha.at(1);
    rep.add(CheckEntry::relation("inf equals -alpha_1^2", w.inf_coupling, "=", -(a1 * a1),
                                 "coupling infimum in closed form"));
}

void scenario_adjoint_nonmonotone(const ScenarioConfig& cfg, CertReport& rep) {
    AdjointWitness w = adjoint_nonmono_witness(cfg.alpha);
    rep.add(CheckEntry::relation("monotonicity product", w.product, "=", -cfg.alpha.at(1),
                                 "product of the adjoint graph pair is -alpha_1"));
    rep.add(CheckEntry::relation("product negative", w.product, "<", Rational(0),
                                 "a negative product certifies the adjoint is not monotone"));
    rep.note("witness pair: (S e_1 - alpha, e_1) and (0, 0) in the adjoint graph");
}

void scenario_bc_a2(const ScenarioConfig& cfg, CertReport& rep) {
    int i0 = 1;
    while (cfg.alpha.at(i0) == 0) ++i0;
    CertReport frag = bc_fail_a2(cfg.alpha, i0);
    for (auto& c : frag.checks) rep.add(c);
    rep.config.emplace_back("i0", std::to_string(i0));
}

void scenario_bc_a4(const ScenarioConfig& cfg, CertReport& rep) {
    CertReport frag = bc_fail_a4(cfg.alpha, 1);
    for (auto& c : frag.checks) rep.add(c);
    rep.config.emplace_back("i0", "1");
}

void scenario_sum_ni(const ScenarioConfig& cfg, CertReport& rep) {
    CertReport frag = sum_ni_witness(cfg.alpha, FiniteVec::unit(1), cfg.N);
    for (auto& c : frag.checks) rep.add(c);
    for (auto& n : frag.notes) rep.note(n);
}

void scenario_james_norm(const ScenarioConfig& cfg, CertReport& rep) {
    Rng rng(cfg.seed);
    int N = std::min(std::max(cfg.N, 2), 12);
    const int count = 100;
    for (int i = 1; i <= count; ++i) {
        FiniteVec x = rng.finite_vec(N, 5, 3);
        Rational dp = james_norm_sq(x, N);
        Rational enumd = james_norm_sq_enum(x, N);
        rep.add(CheckEntry::relation("DP = enumeration @" + std::to_string(i), dp, "=", enumd,
                                     "chain dynamic program against exhaustive subsequences"));
    }
    FiniteVec x = rng.finite_vec(N, 5, 3);
    Rational lambda = rat(3, 2);
    rep.add(CheckEntry::relation("degree-2 homogeneity", james_norm_sq(lambda * x, N), "=",
                                 lambda * lambda * james_norm_sq(x, N),
                                 "squared norm scales quadratically"));
}

void scenario_james_dual_norm(const ScenarioConfig& cfg, CertReport& rep) {
    struct Case {
        FiniteVec f;
        Rational expected;
        std::string label;
    };
    FiniteVec e1 = FiniteVec::unit(1), e2 = FiniteVec::unit(2);
    std::vector<Case> cases = {{e1, Rational(1), "e1*"},
                               {e1 + e2, Rational(2), "e1*+e2*"},
                               {e1 - e2, Rational(1), "e1*-e2*"}};
    for (const auto& c : cases) {
        JamesDualBracket b = james_dual_norm(c.f, cfg.tol);
        if (!b.converged) {
            rep.add(CheckEntry::error("bracket " + c.label, "cutting plane did not converge",
                                      "iteration cap reached; best bracket reported"));
            continue;
        }
        rep.add(CheckEntry::relation("bracket width <= tol (" + c.label + ")", b.hi - b.lo,
                                     "<=", cfg.tol, "cutting-plane termination criterion"));
        Rational grid = james_dual_grid_opt(c.f, rat(1, 4));
        rep.add(CheckEntry::relation("lo <= grid optimum (" + c.label + ")", b.lo, "<=", grid,
                                     "grid search stays inside the bracket"));
        rep.add(CheckEntry::relation("grid optimum <= hi (" + c.label + ")", grid, "<=", b.hi,
                                     "grid search stays inside the bracket"));
        rep.add(CheckEntry::relation("grid optimum value (" + c.label + ")", grid, "=",
                                     c.expected, "independently computed dual-norm value"));
        rep.add(CheckEntry::relation("lo <= value (" + c.label + ")", b.lo, "<=", c.expected,
                                     "bracket contains the dual-norm value"));
        rep.add(CheckEntry::relation("value <= hi (" + c.label + ")", c.expected, "<=", b.hi,
                                     "bracket contains the dual-norm value"));
    }
}

void scenario_dual_gossez_range(const ScenarioConfig& cfg, CertReport& rep) {
    FiniteVec e2 = FiniteVec::unit(2);
    EventualVec coeffs = dual_gossez_coeffs(e2, cfg.N);
    EventualVec expected_coeffs({Rational(1), Rational(0)}, Rational(-1), AlphaSpec::ones());
    rep.add(CheckEntry::serialized("coefficients at e_2*", coeffs.str(), expected_coeffs.str(),
                                   "explicit dual-side image of a coordinate functional"));
    EventualVec perturbed = dual_gossez_plus_rank1(e2, cfg.N);
    EventualVec expected_pert({Rational(2), Rational(1)}, Rational(0), AlphaSpec::ones());
    rep.add(CheckEntry::serialized("rank-one perturbed image at e_2*", perturbed.str(),
                                   expected_pert.str(),
                                   "coefficients 2 sum_{i>k} y*_i + y*_k of the perturbed image"));
    Rng rng(cfg.seed);
    for (int i = 1; i <= 10; ++i) {
        FiniteVec ys = rng.finite_vec(std::min(cfg.N, 12));
        EventualVec img = dual_gossez_plus_rank1(ys, cfg.N);
        rep.add(CheckEntry::relation("tail coefficient vanishes @" + std::to_string(i),
                                     img.tail_coeff(), "=", Rational(0),
                                     "range of the perturbed operator stays in the basis span"));
        Rational s = pair(ys, EventualVec::multiple_of_alpha(Rational(1), AlphaSpec::ones()));
        int k = std::max(cfg.N, ys.max_support());
        rep.add(CheckEntry::relation("telescoped skew sum @" + std::to_string(i),
                                     dual_gossez_telescope(ys, k), "=", s * s,
                                     "telescoping of tail sums equals <e, y*>^2 beyond the "
                                     "support"));
        rep.add(CheckEntry::relation("coordinate skew pairing @" + std::to_string(i),
                                     pair(dual_gossez_coeffs(ys, cfg.N), ys), "=", Rational(0),
                                     "dual-side operator is skew for every finite y*"));
    }
}

void scenario_dual_formula(const ScenarioConfig& cfg, CertReport& rep) {
    double tol = cfg.tol.get_d();
    ScalarPiece half_sq{ScalarPiece::Kind::Square, 0.5};
    ScalarPiece full_sq{ScalarPiece::Kind::Square, 1.0};
    ScalarPiece ind0{ScalarPiece::Kind::IndicatorZero, 0.0};
    std::vector<std::pair<SeparableSpec, SeparableSpec>> specs = {
        {{half_sq, half_sq, "1/2 x^2 (+) 1/2 y^2"}, {half_sq, half_sq, "1/2 x^2 (+) 1/2 y^2"}},
        {{half_sq, half_sq, "1/2 x^2 (+) 1/2 y^2"}, {ind0, ind0, "indicator of {0}"}},
        {{full_sq, full_sq, "x^2 (+) y^2"}, {half_sq, half_sq, "1/2 x^2 (+) 1/2 y^2"}},
    };
    for (const auto& [f1, f2] : specs) {
        DualFormulaResult r = dual_formula_bruteforce(f1, f2, 4.0, 1e-5, tol);
        rep.add(CheckEntry::boolean("grid agreement: " + f1.name + " vs " + f2.name, r.pass,
                                    "both conjugate formulas agree on the evaluation grid "
                                    "with locally certified minimizers"));
        for (auto& c : r.fragment.checks) {
            c.name = "[" + f1.name + " vs " + f2.name + "] " + c.name;
            rep.add(c);
        }
    }
}

void scenario_transport(const ScenarioConfig& cfg, CertReport& rep) {
    GraphSample g = graph_T_alpha(cfg.alpha, 2, /*pairwise_sums=*/false);
    LinearMap twice = LinearMap::scaling(2, Rational(2));
    GraphSample t = transport_graph(twice, g);
    rep.note("graph sample: " + t.generator);
    const GraphPoint& p = g.points.front();
    const GraphPoint& q = t.points.front();
    rep.add(CheckEntry::serialized(
        "scaling doubles domain points", vec_str(q.first),
        vec_str(AnyVec(Rational(2) * std::get<FiniteVec>(p.first))),
        "L = 2 Id maps (x, x*) to (2x, x*/2)"));
    rep.add(CheckEntry::serialized(
        "scaling halves functionals", vec_str(q.second),
        vec_str(AnyVec(rat(1, 2) * std::get<FiniteVec>(p.second))),
        "L = 2 Id maps (x, x*) to (2x, x*/2)"));
    GraphSample ident = transport_graph(LinearMap::identity(2), g);
    rep.add(CheckEntry::serialized("identity transport is a no-op", vec_str(ident.points[0].first),
                                   vec_str(p.first), "identity map leaves the graph unchanged"));

    // Injective 3 x 2 embedding: products must be preserved exactly.
    LinearMap embed(std::vector<std::vector<Rational>>{
        {Rational(1), Rational(1)}, {Rational(0), Rational(2)}, {Rational(1), Rational(-1)}});
    GraphSample bigger = graph_T_alpha(cfg.alpha, 2);
    GraphSample moved = transport_graph(embed, bigger);
    bool preserved = true;
    for (size_t i = 0; i < bigger.points.size(); ++i) {
        for (size_t j = 0; j < bigger.points.size(); ++j) {
            Rational before =
                pair(std::get<FiniteVec>(bigger.points[i].first) -
                         std::get<FiniteVec>(bigger.points[j].first),
                     std::get<FiniteVec>(bigger.points[i].second) -
                         std::get<FiniteVec>(bigger.points[j].second));
            Rational after =
                pair(std::get<FiniteVec>(moved.points[i].first) -
                         std::get<FiniteVec>(moved.points[j].first),
                     std::get<FiniteVec>(moved.points[i].second) -
                         std::get<FiniteVec>(moved.points[j].second));
            if (before != after) preserved = false;
        }
    }
    rep.add(CheckEntry::boolean("monotonicity products preserved", preserved,
                                "adjoint identity <L(x-y), w*-v*> = <x-y, x*-y*>"));
}

const std::map<std::string, ScenarioFn>& scenario_table() {
    static const std::map<std::string, ScenarioFn> table = {
        {"quadratic-identity", scenario_quadratic_identity},
        {"skewness", scenario_skewness},
        {"fitzpatrick-indicator", scenario_fitzpatrick_indicator},
        {"ni-gap", scenario_ni_gap},
        {"br-failure", scenario_br_failure},
        {"adjoint-nonmonotone", scenario_adjoint_nonmonotone},
        {"bc-simons-a2", scenario_bc_a2},
        {"bc-simons-a4", scenario_bc_a4},
        {"sum-ni", scenario_sum_ni},
        {"james-norm", scenario_james_norm},
        {"james-dual-norm", scenario_james_dual_norm},
        {"dual-gossez-range", scenario_dual_gossez_range},
        {"dual-formula", scenario_dual_formula},
        {"transport", scenario_transport},
    };
    return table;
}

}  // namespace

CertReport run_scenario(const ScenarioConfig& cfg) {
    cfg.validate();
    auto it = scenario_table().find(cfg.scenario);
    if (it == scenario_table().end())
        throw std::invalid_argument("unknown scenario: " + cfg.scenario);

    CertReport rep;
    rep.scenario = cfg.scenario;
    rep.config.emplace_back("alpha", cfg.alpha.str());
    rep.config.emplace_back("trunc", std::to_string(cfg.N));
    rep.config.emplace_back("seed", std::to_string(cfg.seed));
    rep.config.emplace_back("tol", rat_str(cfg.tol));
    try {
        it->second(cfg, rep);
    } catch (const std::invalid_argument& e) {
        rep.add(CheckEntry::error("precondition", e.what(),
                                  "module precondition surfaced as a structured entry"));
    }
    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write report to " + cfg.out);
        f << render_report(rep, cfg.format);
    }
    return rep;
}

std::string render_report(const CertReport& report, const std::string& format) {
    return format == "markdown" ? report.to_markdown() : report.to_json();
}

}  // namespace monocert
