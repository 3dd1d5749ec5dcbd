"""Smoke tests for the python bindings: a few frozen values per module."""

from fractions import Fraction

import monocert as mc


def frac(s):
    return Fraction(s)


def test_pairing_and_norms():
    e1 = mc.FiniteVec.unit(1)
    e2 = mc.FiniteVec.unit(2)
    assert mc.pair(e1, e1) == "1"
    v = mc.FiniteVec({1: "1", 2: "-1"})
    assert mc.norm_l1(v) == "2"
    assert mc.norm_sup(v) == "1"
    assert e1 + e2 == mc.FiniteVec({1: "1", 2: "1"})


def test_quadratic_identity_and_skewness():
    alpha = mc.AlphaSpec("2;1")
    xs = mc.FiniteVec({1: "1/2", 3: "-2", 7: "5/3"})
    coupling = frac(mc.pair(mc.apply_A(alpha, xs), xs))
    inner = sum(frac(alpha.at(n)) * frac(xs.at(n)) for n in range(1, 9))
    assert coupling == inner * inner
    assert frac(mc.pair_eventual(xs, mc.apply_S(alpha, xs))) == 0
    assert frac(mc.pair_eventual(xs, mc.apply_G(xs))) == 0


def test_adjoint_image():
    img = mc.adjoint_A(mc.AlphaSpec("e"), mc.FiniteVec.unit(1))
    assert img.at(1) == "1"
    assert img.at(2) == "2"
    assert img.tail_coeff() == "2"


def test_james_norm_values():
    v = mc.FiniteVec({1: "1", 2: "-1"})
    assert mc.james_norm_sq(v, 2) == "5"
    assert mc.james_norm_sq_enum(v, 2) == "5"
    bracket = mc.james_dual_norm(mc.FiniteVec.unit(1), "1/10000")
    assert bracket["converged"]
    assert frac(bracket["lo"]) <= 1 <= frac(bracket["hi"])


def test_counterexample_reports():
    a2 = mc.bc_fail_a2(mc.AlphaSpec("e"), 1)
    assert a2["failed"] == 0
    strict = [c for c in a2["checks"] if c["name"].startswith("f*(v0*) + f**")]
    assert strict and strict[0]["lhs"] == "2" and strict[0]["rhs"] == "3"

    a4 = mc.bc_fail_a4(mc.AlphaSpec("e"), 1)
    assert a4["failed"] == 0

    gap = mc.ni_gap_at_adjoint_e1(mc.AlphaSpec("e"), 6)
    assert gap["exact"] and gap["gap"] == "1"

    br = mc.br_witness(mc.AlphaSpec("e"), mc.FiniteVec.unit(1), 6)
    assert br["inf_coupling"] == "-1"
    assert br["range_distance"] == "1"


def test_graph_level_operations():
    g = mc.graph_T_alpha(mc.AlphaSpec("e"), 4)
    assert len(g) > 0 and "T_alpha" in g.generator
    e1 = mc.FiniteVec.unit(1)
    zero = mc.FiniteVec({})
    assert frac(mc.mono_related_min(g, zero, zero)) == 0
    assert mc.phelps_simons_check(g, zero, zero)
    assert not mc.phelps_simons_check(g, e1, e1)
    assert mc.fitz_skew_exact(mc.AlphaSpec("e"), e1, e1).startswith("+inf")
    assert mc.fitz_sampled_lb(g, e1, e1).endswith("samples)")


def test_scenarios_round_trip():
    names = [s["name"] for s in mc.list_scenarios()]
    assert len(names) == 14
    assert "ni-gap" in names
    rep = mc.run_scenario("ni-gap", alpha="e", trunc=5, seed=1)
    assert rep["failed"] == 0
    # deterministic rendering
    j1 = mc.render_scenario_json("skewness", alpha="e", trunc=5, seed=9)
    j2 = mc.render_scenario_json("skewness", alpha="e", trunc=5, seed=9)
    assert j1 == j2
