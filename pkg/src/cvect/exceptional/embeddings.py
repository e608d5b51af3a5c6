"""The operators A_f and alpha_g and the two embeddings into vect(4|3)."""

from __future__ import annotations

from cvect.buttin import CYCLIC, U, XI, d3xi, delta, le_field, second_xi, xi123
from cvect.superpoly import CHART_43, SuperPoly, mul, partial, partials
from cvect.superfield import SuperField

Y = "y"


def lift(f: SuperPoly) -> SuperPoly:
    """Move a generating function onto the (4|3) chart."""
    return f.to_chart(CHART_43)


def _y(power: int = 1) -> SuperPoly:
    return SuperPoly.monomial(CHART_43, {Y: power})


def a_field(f: SuperPoly) -> SuperField:
    """``A_f = sum over cyclic (i,j,k) of (d^2 f / dx_j dx_k) d_{x_i}``."""
    f = lift(f)
    return SuperField(CHART_43, {XI[i]: second_xi(f, j, k) for i, j, k in CYCLIC})


def euler_odd(coeff: SuperPoly) -> SuperField:
    """``coeff * sum(x_i d_{x_i})``."""
    return SuperField(CHART_43, {x: mul(coeff, SuperPoly.var(CHART_43, x)) for x in XI})


def i2_field(f: SuperPoly) -> SuperField:
    """``Le_f + y A_f - (-1)^{p(f)} (y Delta f + y^2 D3 f) d_y``."""
    out = SuperField.zero(CHART_43)
    for p, fp in lift(f).parity_parts().items():
        r = mul(_y(), delta(fp)) + mul(_y(2), d3xi(fp))
        field = le_field(fp) + _y() * a_field(fp) + SuperField(CHART_43, {Y: r if p else -r})
        out = out + field
    return out


def alpha_field(g: SuperPoly) -> SuperField:
    """``A_g - (-1)^{p(g)} (Delta g + 2 y D3 g) d_y``."""
    out = SuperField.zero(CHART_43)
    for p, gp in lift(g).parity_parts().items():
        r = delta(gp) + mul(_y(), d3xi(gp)).scale(2)
        out = out + a_field(gp) + SuperField(CHART_43, {Y: r if p else -r})
    return out


def _i1_even_u(f: SuperPoly) -> SuperField:
    # f = f(u): Le of sum(df/du_i x_j x_k) - y f, with y a parameter
    F = -mul(_y(), f)
    for i, j, k in CYCLIC:
        xj = SuperPoly.var(CHART_43, XI[j])
        xk = SuperPoly.var(CHART_43, XI[k])
        F = F + mul(partial(f, U[i]), mul(xj, xk))
    return le_field(F)


def _i1_linear(f: SuperPoly) -> SuperField:
    # f = sum f_i(u) x_i
    ph = delta(f)
    r = -mul(ph, _y()) + delta(mul(ph, xi123(CHART_43)))
    return le_field(f) - euler_odd(ph) + SuperField(CHART_43, {Y: r})


def _i1_quadratic(f: SuperPoly) -> SuperField:
    # f = psi_1 x2 x3 + psi_2 x3 x1 + psi_3 x1 x2
    comps = {XI[i]: -partials(f, XI[k], XI[j]) for i, j, k in CYCLIC}
    comps[Y] = -delta(f)
    return SuperField(CHART_43, comps)


def _i1_cubic(f: SuperPoly) -> SuperField:
    # f = psi x1 x2 x3
    psi = partials(f, XI[2], XI[1], XI[0])
    return SuperField(CHART_43, {Y: -psi})


_I1_CASES = (_i1_even_u, _i1_linear, _i1_quadratic, _i1_cubic)


def i1_field(h: SuperPoly) -> SuperField:
    """Embedding of the regraded algebra, assembled case by case on the odd degree of ``h``."""
    h = lift(h).drop_constant()
    out = SuperField.zero(CHART_43)
    for k, part in h.odd_degree_parts().items():
        out = out + _I1_CASES[k](part)
    return out


def realize(f: SuperPoly, g: SuperPoly) -> SuperField:
    """The field ``i1(f) + i2(g)`` of a glued pair ``(f, g)``."""
    return i1_field(f) + i2_field(g)
