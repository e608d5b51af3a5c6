"""Closed-form brackets ``[i2 f, i1 h]`` and the bracket of glued pairs.

``mixed_bracket`` dispatches on ``(deg_xi f, deg_xi h)`` to one of sixteen
cells.  Each cell is an explicit pair; :func:`mixed_bracket_oracle` computes the
same bracket by commuting the realized fields and decomposing, and the test
suite requires the two to agree.
"""

from __future__ import annotations

from typing import Callable

from cvect.buttin import CYCLIC, XI, buttin_bracket, d3xi, delta, delta_inv, gf, odd_part_degree, xi123
from cvect.exceptional.embeddings import i1_field, i2_field
from cvect.exceptional.pairs import GluedPair, canonicalize, decompose, require_homogeneous
from cvect.superpoly import CHART_33, SuperPoly, mul, partial, partials
from cvect.superfield import commutator

XI123 = xi123(CHART_33)
ZERO = SuperPoly.zero(CHART_33)


def a_apply(h: SuperPoly, f: SuperPoly) -> SuperPoly:
    """``A_h f = sum over cyclic (i,j,k) of (d^2 h / dx_j dx_k) * df/dx_i``."""
    out = SuperPoly.zero(f.chart)
    for i, j, k in CYCLIC:
        out = out + mul(partials(h, XI[j], XI[k]), partial(f, XI[i]))
    return out


def _br(a: SuperPoly, b: SuperPoly) -> SuperPoly:
    return buttin_bracket(a, b, keep_constant=True)


def _i1(x: SuperPoly) -> GluedPair:
    return GluedPair(x, ZERO)


def _i2(x: SuperPoly) -> GluedPair:
    return GluedPair(ZERO, x)


def _zero(f, h) -> GluedPair:
    return GluedPair.zero()


def _c_h0(f, h):
    return _i2(_br(f, delta(mul(h, XI123))))


def _c20(f, h):
    # {f, Delta(h x1 x2 x3)} = +{Delta f, h} x1 x2 x3 when f has odd degree 2
    return _i2(mul(_br(delta(f), h), XI123))


def _c01(f, h):
    return _i1(-_br(delta(mul(f, XI123)), h))


def _c11(f, h):
    t = delta_inv(_br(f, delta(h)))
    return GluedPair(t, _br(f, h) - t)


def _c21(f, h):
    return _i2(delta(mul(f, h)) - mul(delta(f), h))


def _c31(f, h):
    return _i2(mul(f, delta(h)) + mul(delta(f), h))


def _c02(f, h):
    return _i1(mul(_br(f, delta(h)), XI123))


def _c12(f, h):
    return _i1(-(delta(mul(f, h)) + mul(f, delta(h))))


def _c22(f, h):
    t = delta_inv(d3xi(mul(f, delta(h))))
    return GluedPair(t, a_apply(h, f) - t)


def _c32(f, h):
    return _i2(-mul(h, d3xi(f)))


def _c13(f, h):
    return _i1(-mul(f, delta(h)) - mul(delta(f), h))


def _c23(f, h):
    # printed with g where only h is in scope
    return _i1(-mul(f, d3xi(h)))


def _c33(f, h):
    t = delta_inv(mul(d3xi(f), d3xi(h)))
    return GluedPair(t, -t)


CELLS: dict[tuple[int, int], Callable[[SuperPoly, SuperPoly], GluedPair]] = {
    (0, 0): _c_h0, (1, 0): _c_h0, (2, 0): _c20, (3, 0): _zero,
    (0, 1): _c01, (1, 1): _c11, (2, 1): _c21, (3, 1): _c31,
    (0, 2): _c02, (1, 2): _c12, (2, 2): _c22, (3, 2): _c32,
    (0, 3): _zero, (1, 3): _c13, (2, 3): _c23, (3, 3): _c33,
}


def _prepare(f: SuperPoly, h: SuperPoly) -> tuple[SuperPoly, SuperPoly]:
    f, h = gf(f), gf(h)
    require_homogeneous(f)
    require_homogeneous(h)
    return f, h


def mixed_bracket(f: SuperPoly, h: SuperPoly) -> GluedPair:
    """``[i2 f, i1 h]`` from the sixteen-cell table; ``f`` and ``h`` bihomogeneous."""
    f, h = _prepare(f, h)
    if not f or not h:
        return GluedPair.zero()
    return canonicalize(CELLS[(odd_part_degree(f), odd_part_degree(h))](f, h))


def mixed_bracket_oracle(f: SuperPoly, h: SuperPoly) -> GluedPair:
    """Same bracket computed by commuting realized fields."""
    f, h = _prepare(f, h)
    return decompose(commutator(i2_field(f), i1_field(h)))


def _bihomogeneous(f: SuperPoly):
    return [part for part in f.components().values()]


def _pmul(a: int, b: int) -> int:
    return -1 if a and b else 1


def bracket_pair(p1: GluedPair, p2: GluedPair) -> GluedPair:
    """Bracket of glued pairs by bilinear expansion through the table."""
    f1, g1 = p1.f, p1.g
    f2, g2 = p2.f, p2.g
    for s in (f1, g1, f2, g2):
        require_homogeneous(s)
    f = _br(f1, f2)
    g = _br(g1, g2)
    out = GluedPair(f, g)
    # [i2 g1, i1 f2]
    for a in _bihomogeneous(g1):
        for b in _bihomogeneous(f2):
            out = out + mixed_bracket(a, b)
    # [i1 f1, i2 g2] = -(-1)^{(p(f1)+1)(p(g2)+1)} [i2 g2, i1 f1]
    if f1 and g2:
        sign = -_pmul(f1.parity ^ 1, g2.parity ^ 1)
        for a in _bihomogeneous(g2):
            for b in _bihomogeneous(f1):
                out = out + mixed_bracket(a, b).scale(sign)
    return canonicalize(out)


def bracket_pair_oracle(p1: GluedPair, p2: GluedPair) -> GluedPair:
    return decompose(commutator(p1.realize(), p2.realize()))
