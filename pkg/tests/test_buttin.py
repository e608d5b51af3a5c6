from fractions import Fraction

import pytest

from cvect.buttin import (
    SleClass,
    buttin_bracket,
    d3xi,
    delta,
    delta_inv,
    le_field,
    nu,
    phi,
    sle_classify,
)
from cvect.sampling import random_bihomogeneous
from cvect.superfield import commutator
from cvect.superpoly import CHART_33, mul
from conftest import P


def F33(text):
    from cvect.expr import parse_field

    return parse_field(text, CHART_33)


def test_le_field_examples():
    assert le_field(P("u1")) == F33("d_x1")
    assert le_field(P("x1")) == F33("-d_u1")
    assert le_field(P("u1*x1")) == F33("x1*d_x1 - u1*d_u1")


def test_buttin_examples():
    assert buttin_bracket(P("x1"), P("x2")).is_zero()
    assert buttin_bracket(P("u1*u2"), P("x1")) == P("u2")
    assert buttin_bracket(P("u1*x1"), P("u1")) == P("-u1")


def test_delta_examples():
    assert delta(P("u1*x1")) == P("1")
    assert delta(P("x1*x2*x3")).is_zero()
    assert delta(P("u1*x2")).is_zero()


def test_delta_inv_examples():
    r = delta_inv(P("x1"))
    assert r == mul(phi(), P("x1")).scale(Fraction(1, 2))
    assert delta(r) == P("x1")
    assert delta_inv(P("x1*x2")) == P("u3*x1*x2*x3")
    with pytest.raises(ZeroDivisionError):
        delta_inv(P("x1*x2*x3"))
    assert nu(P("u1*u2*x1")) == 4


def test_d3xi_examples():
    assert d3xi(P("x1*x2*x3")) == P("-1")
    assert d3xi(P("u1*x1*x2")).is_zero()
    assert d3xi(P("u3*x1*x2*x3")) == P("-u3")


def test_sle_classify_examples():
    assert sle_classify(P("x1")) is SleClass.SLE_DEGREE
    assert sle_classify(P("x1*x2*x3")) is SleClass.SLE
    assert sle_classify(P("u1*x1")) is SleClass.GENERAL


def test_le_is_homomorphism(rng):
    for _ in range(60):
        f, g = random_bihomogeneous(rng), random_bihomogeneous(rng)
        assert le_field(buttin_bracket(f, g)) == commutator(le_field(f), le_field(g))


def test_delta_inv_right_inverse_on_harmonic(rng):
    for _ in range(40):
        f = random_bihomogeneous(rng, max_deg_u=3)
        if delta(f) or any(3 + du - dx == 0 for du, dx in f.bidegrees()):
            continue
        assert delta(delta_inv(f)) == f


def test_buttin_super_antisymmetry(rng):
    for _ in range(60):
        f, g = random_bihomogeneous(rng), random_bihomogeneous(rng)
        # Le_f has parity p(f)+1
        pf, pg = f.parity ^ 1, g.parity ^ 1
        sign = 1 if pf and pg else -1
        assert buttin_bracket(f, g) == buttin_bracket(g, f).scale(sign)
