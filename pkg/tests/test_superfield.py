import pytest

from cvect.exceptional.basis import euler
from cvect.superfield import SuperField, apply, commutator, commutator_oracle, div, graded_components
from cvect.superpoly import CHART_43, ChartMismatchError, MixedParityError
from conftest import P43, V


def test_apply_examples():
    assert apply(V("d_x1"), P43("x1*x2")) == P43("x2")
    assert apply(V("x1*d_u1"), P43("u1*x2")) == P43("x1*x2")
    assert apply(euler(), P43("u1*x2")) == P43("2*u1*x2")


def test_commutator_examples():
    assert commutator(V("d_u1"), V("u1*d_u1")) == V("d_u1")
    assert commutator(V("d_x1"), V("x1*d_y")) == V("d_y")
    assert commutator(euler(), V("d_u1")) == V("-d_u1")


def test_commutator_matches_oracle(rng):
    from cvect.checks import random_field

    for _ in range(50):
        a = random_field(rng, rng.randint(0, 1))
        b = random_field(rng, rng.randint(0, 1))
        assert commutator(a, b) == commutator_oracle(a, b)


def test_commutator_graded_antisymmetry(rng):
    from cvect.checks import random_field

    for _ in range(30):
        pa, pb = rng.randint(0, 1), rng.randint(0, 1)
        a, b = random_field(rng, pa), random_field(rng, pb)
        sign = 1 if pa and pb else -1
        assert commutator(a, b) == commutator(b, a).scale(sign)


def test_div_examples():
    assert div(V("d_y")).is_zero()
    assert div(V("u1*d_u1")) == P43("1")
    assert div(V("x1*d_x1")) == P43("-1")
    with pytest.raises(MixedParityError):
        div(V("d_u1 + d_x1"))


def test_graded_components():
    assert graded_components(V("d_u1")) == [(-1, V("d_u1"))]
    assert graded_components(V("u1*d_u1 + y^2*d_y")) == [(0, V("u1*d_u1")), (1, V("y^2*d_y"))]
    w = {"y": -1, "u1": 1, "u2": 1, "u3": 1, "x1": 0, "x2": 0, "x3": 0}
    assert graded_components(V("-y*d_x1"), w) == [(-1, V("-y*d_x1"))]


def test_vector_roundtrip():
    D = V("(u1 - x1*x2)*d_u3 + y^2*d_y - x3*d_x1")
    assert SuperField.from_vector(CHART_43, D.to_vector()) == D


def test_field_chart_mismatch():
    from cvect.superpoly import CHART_33

    with pytest.raises(ChartMismatchError):
        commutator(SuperField.basis(CHART_33, "u1"), V("d_u1"))
