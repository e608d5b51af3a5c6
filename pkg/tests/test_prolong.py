import pytest

from cvect.exceptional.basis import f_element, g0, g_minus1
from cvect.exceptional.membership import in_cvect, in_vect
from cvect.linalg import EchelonBasis, nullspace, rank, rref
from cvect.prolong import (
    InconsistentInputError,
    ProlongationInput,
    Relation,
    STANDARD_INPUTS,
    component,
    dimension_table,
    field_keys,
    prolong_step,
    prolong_to,
    subspace_compare,
)
from cvect.superpoly import CHART_43, Chart, ChartMismatchError
from cvect.expr import parse_field
from conftest import V


def test_linalg_basics():
    vs = [{"a": 1, "b": 2}, {"a": 2, "b": 4}, {"c": 1}]
    assert rank(vs) == 2
    (rel,) = nullspace(vs)
    assert {k: rel[k] * 2 / rel[0] for k in rel} == {0: 2, 1: -1}
    assert rref(vs) == [{"a": 1, "b": 2}, {"c": 1}]
    eb = EchelonBasis(vs, track=True)
    combo = eb.express({"a": 3, "b": 6, "c": -1})
    total = {}
    for lbl, c in combo.items():
        for k, v in vs[lbl].items():
            total[k] = total.get(k, 0) + c * v
    assert {k: v for k, v in total.items() if v} == {"a": 3, "b": 6, "c": -1}
    assert eb.express({"d": 1}) is None


def test_toy_inputs():
    comps = prolong_to(STANDARD_INPUTS["vect1"](), 3)
    assert dimension_table(comps) == [(-1, 1, 0), (0, 1, 0), (1, 1, 0), (2, 1, 0), (3, 1, 0)]
    chart = comps[0].basis[0].chart
    assert comps[2].basis[0] == parse_field("x^2*d_x", chart)
    comps = prolong_to(STANDARD_INPUTS["vect01"](), 1)
    assert comps[-1].dims == (0, 0)


def test_section_input_dimensions():
    assert dimension_table(prolong_to(STANDARD_INPUTS["vect03"](), 0))[1] == (0, 12, 12)
    assert dimension_table(prolong_to(STANDARD_INPUTS["cvect03"](), 0))[1] == (0, 13, 12)


def test_degree_one_contains_f():
    comps = prolong_to(STANDARD_INPUTS["cvect03"](), 1)
    g1 = EchelonBasis(D.to_vector() for D in comps[2].basis)
    assert g1.contains(f_element().to_vector())
    vect1 = prolong_to(STANDARD_INPUTS["vect03"](), 1)[2]
    assert not EchelonBasis(D.to_vector() for D in vect1.basis).contains(f_element().to_vector())


def test_computed_bases_satisfy_system():
    for name, check in (("cvect03", in_cvect), ("vect03", in_vect)):
        for c in prolong_to(STANDARD_INPUTS[name](), 2, check_closure=False):
            assert len(c.basis) == rank(D.to_vector() for D in c.basis)
            for D in c.basis:
                assert D.degree == c.degree
                assert check(D)


def test_subspace_compare():
    assert subspace_compare([V("d_y")], [V("d_y")]).relation is Relation.EQUAL
    cmp = subspace_compare([V("d_u1")], [V("d_u1"), V("d_u2")])
    assert cmp.relation is Relation.A_IN_B and cmp.dim_intersection == 1
    assert subspace_compare([V("d_u1"), V("d_u2")], [V("d_u1")]).relation is Relation.B_IN_A
    assert subspace_compare([V("d_u1")], [V("d_u2")]).relation is Relation.INCOMPARABLE
    with pytest.raises(ChartMismatchError):
        subspace_compare([V("d_u1")], [parse_field("d_x", Chart.make(("x",), ()))])


def test_i1_degree_zero_matches_section_table():
    from cvect.exceptional.pairs import pair_degree_images

    i1s, _ = pair_degree_images(0)
    assert subspace_compare(i1s, list(g0().values())).relation is Relation.EQUAL


def test_inconsistent_inputs():
    gm1 = list(g_minus1().values())
    with pytest.raises(InconsistentInputError):
        prolong_to(ProlongationInput(CHART_43, gm1[:-1], list(g0().values())), 1)
    with pytest.raises(InconsistentInputError):
        prolong_to(ProlongationInput(CHART_43, gm1, [V("u1*d_u2"), V("u2*d_u1")]), 1)
    with pytest.raises(InconsistentInputError):
        prolong_to(ProlongationInput(CHART_43, gm1, [V("u1^2*d_u2")]), 1)
    inp = STANDARD_INPUTS["vect03"]()
    with pytest.raises(InconsistentInputError):
        prolong_step(component(CHART_43, 0, inp.g_0), inp, 2)
    with pytest.raises(ChartMismatchError):
        ProlongationInput(Chart.make(("x",), ()), gm1, [])


def test_field_keys_need_positive_weights():
    with pytest.raises(ValueError):
        field_keys(CHART_43.with_weights({"y": -1}), 0)
