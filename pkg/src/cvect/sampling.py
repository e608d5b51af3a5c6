"""Seeded random generation of polynomials and fields for property checks."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache

from cvect.superpoly import CHART_33, Chart, Monomial, SuperPoly


@lru_cache(maxsize=None)
def monomials(chart: Chart, deg_even: int, deg_odd: int, even_vars: tuple[str, ...] | None = None) -> tuple[Monomial, ...]:
    """All monomials with the given even and odd degree, in sorted order.

    ``even_vars`` restricts which even coordinates may appear.
    """
    allowed = [chart.var(n).index for n in (even_vars or chart.even)]
    n_even = len(chart.even)
    out = []
    for combo in itertools.combinations_with_replacement(allowed, deg_even):
        exps = [0] * n_even
        for i in combo:
            exps[i] += 1
        for odd in itertools.combinations(range(len(chart.odd)), deg_odd):
            mask = 0
            for j in odd:
                mask |= 1 << j
            out.append(Monomial(tuple(exps), mask))
    return tuple(sorted(out))


def monomial_polys(chart: Chart, deg_even: int, deg_odd: int, even_vars=None) -> list[SuperPoly]:
    return [SuperPoly(chart, {m: 1}) for m in monomials(chart, deg_even, deg_odd, even_vars)]


def random_poly(rng: random.Random, deg_u: int, deg_xi: int, chart: Chart = CHART_33,
                n_terms: int = 3, even_vars=None, nonzero: bool = True) -> SuperPoly:
    """Random bihomogeneous polynomial with small integer and half-integer coefficients."""
    pool = monomials(chart, deg_u, deg_xi, even_vars)
    while True:
        k = min(n_terms, len(pool))
        picks = rng.sample(pool, rng.randint(1, k))
        terms = {m: Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2])) for m in picks}
        f = SuperPoly(chart, terms)
        if f or not nonzero:
            return f


def random_bihomogeneous(rng: random.Random, max_deg_u: int = 3, chart: Chart = CHART_33,
                         deg_xi: int | None = None, min_deg_u: int = 0, n_terms: int = 3) -> SuperPoly:
    """Random nonconstant bihomogeneous generating function on the u/xi coordinates."""
    even_vars = tuple(n for n in chart.even if n != "y")
    while True:
        du = rng.randint(min_deg_u, max_deg_u)
        dx = rng.randint(0, 3) if deg_xi is None else deg_xi
        if du + dx == 0:
            continue
        return random_poly(rng, du, dx, chart, n_terms, even_vars)
