#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monocert/convex.hpp"
#include "monocert/fitzpatrick.hpp"
#include "monocert/infconv.hpp"
#include "monocert/james.hpp"
#include "monocert/operators.hpp"
#include "monocert/pathology.hpp"
#include "monocert/scenarios.hpp"

namespace py = pybind11;
using namespace monocert;

namespace {

// Rationals cross the boundary as canonical "p/q" strings; Python callers
// can hand them to fractions.Fraction unchanged.
Rational from_str(const std::string& s) { return rat_parse(s); }

FiniteVec finite_from_dict(const py::dict& d) {
    FiniteVec v;
    for (auto item : d)
        v.set(py::cast<int>(item.first), from_str(py::cast<std::string>(py::str(item.second))));
    return v;
}

py::dict finite_to_dict(const FiniteVec& v) {
    py::dict d;
    for (const auto& [n, val] : v.entries()) d[py::int_(n)] = rat_str(val);
    return d;
}

py::dict report_to_dict(const CertReport& rep) {
    py::dict d;
    d["scenario"] = rep.scenario;
    py::dict cfg;
    for (const auto& [k, v] : rep.config) cfg[py::str(k)] = v;
    d["config"] = cfg;
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict e;
        e["name"] = c.name;
        e["lhs"] = c.lhs;
        e["rel"] = c.rel;
        e["rhs"] = c.rhs;
        e["pass"] = c.pass;
        e["paper_anchor"] = c.anchor;
        checks.append(e);
    }
    d["checks"] = checks;
    d["passed"] = rep.passed();
    d["failed"] = rep.failed();
    return d;
}

}  // namespace

PYBIND11_MODULE(_monocert, m) {
    m.doc() = "Exact-rational certification core for pathological maximally "
              "monotone operators on sequence spaces";

    py::class_<AlphaSpec>(m, "AlphaSpec")
        .def(py::init([](const std::string& text) { return AlphaSpec::parse(text); }))
        .def_static("ones", &AlphaSpec::ones)
        .def("at", [](const AlphaSpec& a, int n) { return rat_str(a.at(n)); })
        .def("sup_norm", [](const AlphaSpec& a) { return rat_str(a.sup_norm()); })
        .def("__str__", &AlphaSpec::str);

    py::class_<FiniteVec>(m, "FiniteVec")
        .def(py::init(&finite_from_dict))
        .def_static("unit", &FiniteVec::unit)
        .def("at", [](const FiniteVec& v, int n) { return rat_str(v.at(n)); })
        .def("entries", &finite_to_dict)
        .def("max_support", &FiniteVec::max_support)
        .def("__add__", [](const FiniteVec& a, const FiniteVec& b) { return a + b; })
        .def("__sub__", [](const FiniteVec& a, const FiniteVec& b) { return a - b; })
        .def("__eq__", [](const FiniteVec& a, const FiniteVec& b) { return a == b; })
        .def("scaled", [](const FiniteVec& v, const std::string& c) { return from_str(c) * v; })
        .def("__str__", &FiniteVec::str);

    py::class_<EventualVec>(m, "EventualVec")
        .def("at", [](const EventualVec& v, int n) { return rat_str(v.at(n)); })
        .def("prefix_len", &EventualVec::prefix_len)
        .def("tail_coeff", [](const EventualVec& v) { return rat_str(v.tail_coeff()); })
        .def("__eq__", [](const EventualVec& a, const EventualVec& b) { return a == b; })
        .def("__str__", &EventualVec::str);

    m.def("pair", [](const FiniteVec& x, const FiniteVec& y) { return rat_str(pair(x, y)); });
    m.def("pair_eventual",
          [](const FiniteVec& x, const EventualVec& y) { return rat_str(pair(x, y)); });
    m.def("norm_l1", [](const FiniteVec& x) { return rat_str(norm_l1(x)); });
    m.def("norm_sup", [](const FiniteVec& x) { return rat_str(norm_sup(x)); });
    m.def("norm_sup_eventual", [](const EventualVec& x) { return rat_str(norm_sup(x)); });

    m.def("james_norm_sq",
          [](const FiniteVec& x, int N) { return rat_str(james_norm_sq(x, N)); });
    m.def("james_norm_sq_enum",
          [](const FiniteVec& x, int N) { return rat_str(james_norm_sq_enum(x, N)); });
    m.def("james_dual_norm", [](const FiniteVec& f, const std::string& tol) {
        JamesDualBracket b = james_dual_norm(f, from_str(tol));
        py::dict d;
        d["lo"] = rat_str(b.lo);
        d["hi"] = rat_str(b.hi);
        d["converged"] = b.converged;
        d["iterations"] = b.iterations;
        return d;
    });

    m.def("kernel_basis", &kernel_basis);
    m.def("apply_A", &apply_A_alpha);
    m.def("apply_P", &apply_P_alpha);
    m.def("apply_S", &apply_S_alpha);
    m.def("apply_G", &apply_G);
    m.def("adjoint_A", &adjoint_A_alpha);
    m.def("dual_gossez_coeffs", &dual_gossez_coeffs);
    m.def("dual_gossez_plus_rank1", &dual_gossez_plus_rank1);

    py::class_<GraphSample>(m, "GraphSample")
        .def("__len__", [](const GraphSample& g) { return g.points.size(); })
        .def_readonly("generator", &GraphSample::generator)
        .def("point",
             [](const GraphSample& g, size_t i) {
                 const GraphPoint& p = g.points.at(i);
                 return py::make_tuple(vec_str(p.first), vec_str(p.second));
             })
        .def("scaled", [](const GraphSample& g, const std::string& t) {
            return g.scaled(from_str(t));
        });
    m.def("graph_T_alpha", &graph_T_alpha, py::arg("alpha"), py::arg("N"),
          py::arg("pairwise_sums") = true);
    m.def("mono_related_min",
          [](const GraphSample& g, const FiniteVec& x, const FiniteVec& xs) {
              return rat_str(mono_related_min(g, AnyVec(x), xs));
          });
    m.def("phelps_simons_check",
          [](const GraphSample& g, const FiniteVec& x, const FiniteVec& xs) {
              return phelps_simons_check(g, AnyVec(x), xs).pass;
          });
    m.def("fitz_sampled_lb",
          [](const GraphSample& g, const FiniteVec& x, const FiniteVec& xs) {
              return fitz_sampled_lb(g, x, xs).str();
          });
    m.def("fitz_skew_exact",
          [](const AlphaSpec& alpha, const FiniteVec& x, const FiniteVec& xs) {
              return fitz_skew_exact(alpha, x, xs).str();
          });

    m.def("quadratic_gap", [](const std::string& a) { return rat_str(quadratic_gap(from_str(a))); });
    m.def("nonuniqueness_product",
          [](const std::string& a1, const std::string& a2, const std::string& p) {
              return rat_str(nonuniqueness_product(from_str(a1), from_str(a2), from_str(p)));
          });
    m.def("ni_gap_at_adjoint_e1", [](const AlphaSpec& alpha, int N) {
        GraphSample g = graph_T_alpha(alpha, N);
        FiniteVec e1 = FiniteVec::unit(1);
        WitnessPoint w{AnyVec(adjoint_A_alpha(alpha, e1)), e1, "adjoint image of e_1"};
        NiGapResult r = ni_gap(g, w);
        py::dict d;
        d["exact"] = r.exact;
        d["sup_unbounded"] = r.sup_unbounded;
        d["gap"] = rat_str(r.gap);
        return d;
    });
    m.def("bc_fail_a2",
          [](const AlphaSpec& alpha, int i0) { return report_to_dict(bc_fail_a2(alpha, i0)); });
    m.def("bc_fail_a4",
          [](const AlphaSpec& alpha, int i0) { return report_to_dict(bc_fail_a4(alpha, i0)); });
    m.def("sum_ni_witness", [](const AlphaSpec& alpha, const FiniteVec& x0, int N) {
        return report_to_dict(sum_ni_witness(alpha, x0, N));
    });
    m.def("br_witness", [](const AlphaSpec& alpha, const FiniteVec& z, int N) {
        BrWitness w = br_witness_check(alpha, z, N);
        py::dict d;
        d["inf_coupling"] = rat_str(w.inf_coupling);
        d["range_distance"] = rat_str(w.range_distance);
        d["report"] = report_to_dict(w.fragment);
        return d;
    });

    m.def("list_scenarios", [] {
        py::list out;
        for (const auto& s : list_scenarios()) {
            py::dict d;
            d["name"] = s.name;
            d["anchor"] = s.anchor;
            out.append(d);
        }
        return out;
    });
    m.def(
        "run_scenario",
        [](const std::string& scenario, const std::string& alpha, int trunc,
           std::uint64_t seed, const std::string& tol) {
            ScenarioConfig cfg;
            cfg.scenario = scenario;
            cfg.alpha = AlphaSpec::parse(alpha);
            cfg.N = trunc;
            cfg.seed = seed;
            cfg.tol = rat_parse(tol);
            return report_to_dict(run_scenario(cfg));
        },
        py::arg("scenario"), py::arg("alpha") = "e", py::arg("trunc") = 5,
        py::arg("seed") = 1, py::arg("tol") = "1/10000");
    m.def("render_scenario_json",
          [](const std::string& scenario, const std::string& alpha, int trunc,
             std::uint64_t seed) {
              ScenarioConfig cfg;
              cfg.scenario = scenario;
              cfg.alpha = AlphaSpec::parse(alpha);
              cfg.N = trunc;
              cfg.seed = seed;
              return run_scenario(cfg).to_json();
          },
          py::arg("scenario"), py::arg("alpha") = "e", py::arg("trunc") = 5,
          py::arg("seed") = 1);
}
