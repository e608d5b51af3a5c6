import pytest

from cvect.buttin import SleClass, sle_classify
from cvect.checks import (
    check_i1_homomorphism,
    check_i2_identities,
    check_lemma_alpha,
    check_lemma_i1_split,
    check_lemma_i2_alpha,
    check_membership_closure,
)
from cvect.exceptional.basis import euler, f_element, g0, g_minus1, named_fields
from cvect.exceptional.embeddings import a_field, alpha_field, i1_field, i2_field
from cvect.exceptional.membership import equation_residuals, membership
from cvect.superpoly import CHART_33, ChartMismatchError
from cvect.superfield import SuperField, commutator
from conftest import P, V


def test_basis_dictionary_sizes():
    assert len(g_minus1()) == 7 and len(g0()) == 24
    for D in list(g_minus1().values()) + list(g0().values()):
        assert membership(D, "vect").ok


def test_membership_examples():
    rep = membership(euler(), "vect")
    assert rep.failed() == ["eq7"] and not rep.ok
    assert membership(euler(), "cvect").ok
    # eq7 residual is 1 - 3
    (label, r), = equation_residuals(euler())["eq7"]
    assert str(r) == "-2"
    assert membership(f_element()).ok
    rep = membership(V("x1*d_u1"))
    assert "eq3[i=1,j=1]" in rep.violations


def test_printed_f_sign_fails():
    rep = membership(named_fields()["F_printed"])
    assert not rep.ok
    assert sorted(rep.violations) == ["eq6[k=1]", "eq6[k=2]", "eq6[k=3]"]


def test_membership_needs_43_chart():
    with pytest.raises(ChartMismatchError):
        membership(SuperField.basis(CHART_33, "u1"))


def test_a_field_examples():
    assert a_field(P("u1*u2")) == SuperField.zero(a_field(P("u1")).chart)
    assert a_field(P("x1*x2")) == V("-d_x3")
    assert a_field(P("x1*x2*x3")) == V("-x1*d_x1 - x2*d_x2 - x3*d_x3")


def test_i1_examples():
    assert i1_field(P("u1")) == V("-y*d_x1 - x2*d_u3 + x3*d_u2")
    assert i1_field(P("x2*x3")) == V("-d_x1")
    assert i1_field(P("u1*x1*x2*x3")) == V("-u1*d_y")
    for i in (1, 2, 3):
        assert i1_field(P(f"u{i}")) == g0()[f"d_eta{i}"]


def test_i2_examples():
    assert i2_field(P("u1")) == V("d_x1")
    assert i2_field(P("x1")) == V("-d_u1")
    assert i2_field(P("u1*x1")) == V("x1*d_x1 - u1*d_u1 + y*d_y")
    assert i2_field(P("-x1*x2*x3")) == f_element()


def test_alpha_examples():
    assert not alpha_field(P("u1^2"))
    assert alpha_field(P("x1*x2")) == i1_field(P("x1*x2")) == V("-d_x3")
    assert alpha_field(P("u1*x1")) == V("d_y")


def test_degrees(rng):
    from cvect.sampling import random_bihomogeneous

    for _ in range(40):
        f = random_bihomogeneous(rng)
        du, dx = next(iter(f.bidegrees()))
        if i2_field(f):
            assert i2_field(f).degree == du + dx - 2
        if i1_field(f):
            assert i1_field(f).degree == du - 1
        if alpha_field(f):
            assert alpha_field(f).degree == du + dx - 3


def test_f_element_relations():
    F = f_element()
    for i in (1, 2, 3):
        assert commutator(SuperField.basis(F.chart, f"x{i}"), F) == -g0()[f"d_eta{i}"]
        assert not commutator(SuperField.basis(F.chart, f"u{i}"), F)
    f_y = V("x1*d_x1 + x2*d_x2 + x3*d_x3 + 2*y*d_y")
    assert commutator(SuperField.basis(F.chart, "y"), F) == f_y


@pytest.mark.parametrize("check", [check_i2_identities, check_i1_homomorphism, check_lemma_alpha,
                                   check_lemma_i1_split, check_lemma_i2_alpha, check_membership_closure])
def test_identity_suites(check):
    res = check(n=40, seed=101)
    assert res.ok, res.summary()


def test_vect_criterion_random_combinations(rng):
    from cvect.sampling import random_bihomogeneous

    for _ in range(60):
        f = random_bihomogeneous(rng, n_terms=4)
        expected = sle_classify(f) is SleClass.SLE_DEGREE
        assert membership(i2_field(f), "vect").ok == expected
