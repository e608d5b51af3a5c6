"""Generating-function calculus on the periplectic (3|3) superspace.

Functions live on any chart containing the pairs ``(u_i, x_i)``, i = 1..3; extra
even coordinates (``y`` on the (4|3) chart) are treated as parameters.  The
parity ``p(f)`` is always the parity in the polynomial ring, i.e. the parity of
the number of odd factors.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from cvect.superpoly import (
    CHART_33,
    Chart,
    Monomial,
    SuperPoly,
    mul,
    partial,
    partials,
)
from cvect.superfield import SuperField

U = ("u1", "u2", "u3")
XI = ("x1", "x2", "x3")
# cyclic (i, j, k)
CYCLIC = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


def gf(f: SuperPoly | str, chart: Chart = CHART_33) -> SuperPoly:
    """Normalize to a generating function: move to ``chart`` and drop the constant term."""
    if isinstance(f, str):
        from cvect.expr import parse_poly

        f = parse_poly(f, chart)
    return f.to_chart(chart).drop_constant()


def phi(chart: Chart = CHART_33) -> SuperPoly:
    """``Phi = u1*x1 + u2*x2 + u3*x3``."""
    out = SuperPoly.zero(chart)
    for u, x in zip(U, XI):
        out = out + mul(SuperPoly.var(chart, u), SuperPoly.var(chart, x))
    return out


def xi123(chart: Chart = CHART_33) -> SuperPoly:
    return SuperPoly.monomial(chart, {"x1": 1, "x2": 1, "x3": 1})


def u_degree(m: Monomial, chart: Chart) -> int:
    return sum(m.even[chart.var(u).index] for u in U)


def le_field(f: SuperPoly) -> SuperField:
    """``Le_f = sum(df/du_i d_{x_i} + (-1)^{p(f)} df/dx_i d_{u_i})`` on ``f``'s chart."""
    p = f.parity
    comps = {}
    for u, x in zip(U, XI):
        comps[x] = partial(f, u)
        d = partial(f, x)
        comps[u] = -d if p else d
    return SuperField(f.chart, comps)


def buttin_bracket(f: SuperPoly, g: SuperPoly, keep_constant: bool = False) -> SuperPoly:
    """``{f, g} = sum(df/du_i dg/dx_i + (-1)^{p(f)} df/dx_i dg/du_i)``.

    Mixed-parity ``f`` is split into homogeneous parts.
    """
    out = SuperPoly.zero(f.chart)
    for p, fp in f.parity_parts().items():
        for u, x in zip(U, XI):
            out = out + mul(partial(fp, u), partial(g, x))
            t = mul(partial(fp, x), partial(g, u))
            out = out - t if p else out + t
    return out if keep_constant else out.drop_constant()


def delta(f: SuperPoly) -> SuperPoly:
    """Odd Laplacian ``sum d^2 f / du_i dx_i`` (raw, constants kept)."""
    out = SuperPoly.zero(f.chart)
    for u, x in zip(U, XI):
        out = out + partial(partial(f, x), u)
    return out


def nu(f: SuperPoly) -> int:
    """``3 + deg_u f - deg_xi f`` for bihomogeneous ``f``."""
    degs = {(u_degree(m, f.chart), m.odd_degree) for m in f.terms}
    if len(degs) != 1:
        raise ValueError("nu needs a nonzero bihomogeneous function")
    du, dx = degs.pop()
    return 3 + du - dx


def delta_inv(f: SuperPoly) -> SuperPoly:
    """Right inverse of ``delta`` on harmonic functions: ``Phi * f / nu(f)`` per bidegree."""
    chart = f.chart
    parts: dict[tuple[int, int], dict] = {}
    for m, c in f.terms.items():
        parts.setdefault((u_degree(m, chart), m.odd_degree), {})[m] = c
    Phi = phi(chart)
    out = SuperPoly.zero(chart)
    for (du, dx), t in sorted(parts.items()):
        n = 3 + du - dx
        if n == 0:
            raise ZeroDivisionError(f"delta_inv undefined on bidegree ({du},{dx}) where nu = 0")
        out = out + mul(Phi, SuperPoly(chart, t)).scale(Fraction(1, n))
    return out


def d3xi(f: SuperPoly) -> SuperPoly:
    """``D^3_xi f = d_x1 d_x2 d_x3 f`` (``d_x3`` applied first)."""
    return partials(f, *XI)


def second_xi(f: SuperPoly, j: int, k: int) -> SuperPoly:
    """``d^2 f / dx_j dx_k``, applying ``d_{x_k}`` first (0-based indices)."""
    return partials(f, XI[j], XI[k])


class SleClass(str, Enum):
    GENERAL = "general"
    SLE = "sle"
    SLE_DEGREE = "sle_degree"


def sle_classify(f: SuperPoly) -> SleClass:
    if delta(f):
        return SleClass.GENERAL
    if d3xi(f):
        return SleClass.SLE
    return SleClass.SLE_DEGREE


def odd_part_degree(f: SuperPoly) -> int:
    ds = {m.odd_degree for m in f.terms}
    if len(ds) != 1:
        raise ValueError("function is not homogeneous in the odd variables")
    return ds.pop()
