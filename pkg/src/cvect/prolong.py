"""Cartan prolongation over the rationals.

Given ``g_{-1}`` (all constant fields of a chart) and ``g_0`` (degree-0 fields),
``g_i`` is computed degree by degree as the space of degree-``i`` fields ``D``
with ``[D, X]`` in ``g_{i-1}`` for every ``X`` in ``g_{-1}``.  Membership in
``g_{i-1}`` is tested against its reduced echelon basis: the coordinates of
``[D, X]`` off the pivots, after reduction, must vanish.  These are linear in
``D``, and the solutions are the nullspace of the resulting system.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

from cvect.linalg import EchelonBasis, nullspace
from cvect.superpoly import Chart, ChartMismatchError, Monomial, SuperPoly
from cvect.superfield import GradedComponent, SuperField, commutator


class InconsistentInputError(ValueError):
    pass


@dataclass
class ProlongationInput:
    chart: Chart
    g_minus1: list[SuperField]
    g_0: list[SuperField]
    name: str = ""

    def __post_init__(self):
        for D in list(self.g_minus1) + list(self.g_0):
            if D.chart != self.chart:
                raise ChartMismatchError(f"field on {D.chart}, input chart {self.chart}")


def field_keys(chart: Chart, degree: int) -> list[tuple[int, Monomial]]:
    """All ``(direction index, monomial)`` pairs of weight ``degree``, sorted."""
    w = chart.weights
    we = [w[n] for n in chart.even]
    if any(x <= 0 for x in we):
        raise ValueError("field spaces are finite only for positive even weights")
    wo = [w[n] for n in chart.odd]
    keys = []
    for di, name in enumerate(chart.names):
        target = degree + w[name]
        for r in range(len(chart.odd) + 1):
            for odd in itertools.combinations(range(len(chart.odd)), r):
                rest = target - sum(wo[j] for j in odd)
                if rest < 0:
                    continue
                mask = sum(1 << j for j in odd)
                for exps in _exponents(we, rest):
                    keys.append((di, Monomial(exps, mask)))
    return sorted(keys)


def _exponents(weights: list[int], total: int):
    if not weights:
        if total == 0:
            yield ()
        return
    w0 = weights[0]
    for k in range(total // w0 + 1):
        for rest in _exponents(weights[1:], total - k * w0):
            yield (k,) + rest


def key_parity(chart: Chart, key: tuple[int, Monomial]) -> int:
    di, m = key
    return m.parity ^ chart.var(chart.names[di]).parity


def key_field(chart: Chart, key: tuple[int, Monomial]) -> SuperField:
    di, m = key
    return SuperField(chart, {chart.names[di]: SuperPoly(chart, {m: 1})})


def echelon_fields(chart: Chart, fields: Sequence[SuperField]) -> list[SuperField]:
    """Reduced echelon basis of the span, ordered by pivot."""
    eb = EchelonBasis(D.to_vector() for D in fields)
    return [SuperField.from_vector(chart, r) for r in eb.echelon()]


def component(chart: Chart, degree: int, fields: Sequence[SuperField]) -> GradedComponent:
    return GradedComponent(degree, tuple(echelon_fields(chart, fields)))


def _check_input(inp: ProlongationInput) -> None:
    for D in inp.g_minus1:
        if D.degree != -1:
            raise InconsistentInputError(f"g_-1 element {D} does not have degree -1")
    full = len(field_keys(inp.chart, -1))
    if EchelonBasis(D.to_vector() for D in inp.g_minus1).rank != full:
        raise InconsistentInputError("g_-1 must span all constant fields of the chart")
    for D in inp.g_0:
        if D and D.degree != 0:
            raise InconsistentInputError(f"g_0 element {D} does not have degree 0")
    g0 = EchelonBasis(D.to_vector() for D in inp.g_0)
    for A, B in itertools.combinations_with_replacement(inp.g_0, 2):
        if not g0.contains(commutator(A, B).to_vector()):
            raise InconsistentInputError("g_0 is not closed under the bracket")


def prolong_step(prev: GradedComponent, inp: ProlongationInput, i: int) -> GradedComponent:
    """Compute ``g_i`` from ``g_{i-1}``."""
    if i < 1:
        raise ValueError("prolong_step computes degrees i >= 1")
    if prev.degree != i - 1:
        raise InconsistentInputError(f"previous component has degree {prev.degree}, expected {i - 1}")
    chart = inp.chart
    prev_basis = EchelonBasis(D.to_vector() for D in prev.basis)
    keys = field_keys(chart, i)
    solutions: list[SuperField] = []
    for p in (0, 1):
        cols = [k for k in keys if key_parity(chart, k) == p]
        columns = []
        for k in cols:
            E = key_field(chart, k)
            vec = {}
            for xi, X in enumerate(inp.g_minus1):
                residual, _ = prev_basis.reduce(commutator(E, X).to_vector())
                for rk, c in residual.items():
                    vec[(xi, rk)] = c
            columns.append(vec)
        for rel in nullspace(columns):
            solutions.append(SuperField.from_vector(chart, {cols[j]: c for j, c in rel.items()}))
    return component(chart, i, solutions)


def prolong_to(inp: ProlongationInput, max_degree: int, check_closure: bool = True) -> list[GradedComponent]:
    """Components ``g_{-1}, ..., g_{max_degree}``; optionally verify ``[g_i, g_j]`` in ``g_{i+j}``."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    _check_input(inp)
    comps = [component(inp.chart, -1, inp.g_minus1), component(inp.chart, 0, inp.g_0)]
    for i in range(1, max_degree + 1):
        comps.append(prolong_step(comps[-1], inp, i))
    if check_closure:
        verify_closure(comps)
    return comps


def verify_closure(comps: list[GradedComponent]) -> None:
    by_degree = {c.degree: c for c in comps}
    spans = {d: EchelonBasis(D.to_vector() for D in c.basis) for d, c in by_degree.items()}
    degrees = sorted(by_degree)
    for a, b in itertools.combinations_with_replacement(degrees, 2):
        target = a + b
        if target < -1:
            continue
        if target not in spans:
            continue
        for A in by_degree[a].basis:
            for B in by_degree[b].basis:
                if not spans[target].contains(commutator(A, B).to_vector()):
                    raise InconsistentInputError(f"[g_{a}, g_{b}] is not contained in g_{target}")


def dimension_table(comps: list[GradedComponent]) -> list[tuple[int, int, int]]:
    return [(c.degree, *c.dims) for c in comps]


class Relation(str, Enum):
    EQUAL = "equal"
    A_IN_B = "A_in_B"
    B_IN_A = "B_in_A"
    INCOMPARABLE = "incomparable"


class Comparison(NamedTuple):
    relation: Relation
    dim_a: int
    dim_b: int
    dim_sum: int

    @property
    def dim_intersection(self) -> int:
        return self.dim_a + self.dim_b - self.dim_sum


def subspace_compare(A: Sequence[SuperField], B: Sequence[SuperField]) -> Comparison:
    charts = {D.chart for D in list(A) + list(B)}
    if len({(c.even, c.odd) for c in charts}) > 1:
        raise ChartMismatchError("subspace_compare needs fields on one chart")
    ea = EchelonBasis(D.to_vector() for D in A)
    eb = EchelonBasis(D.to_vector() for D in B)
    both = EchelonBasis(list(ea.rows.values()) + list(eb.rows.values()))
    ra, rb, rs = ea.rank, eb.rank, both.rank
    if ra == rb == rs:
        rel = Relation.EQUAL
    elif rs == rb:
        rel = Relation.A_IN_B
    elif rs == ra:
        rel = Relation.B_IN_A
    else:
        rel = Relation.INCOMPARABLE
    return Comparison(rel, ra, rb, rs)


# -- standard inputs ----------------------------------------------------------

def vect1_input() -> ProlongationInput:
    chart = Chart.make(("x",), ())
    from cvect.expr import parse_field

    return ProlongationInput(chart, [parse_field("d_x", chart)], [parse_field("x*d_x", chart)], "vect1")


def odd_line_input() -> ProlongationInput:
    chart = Chart.make((), ("xi",))
    from cvect.expr import parse_field

    return ProlongationInput(chart, [parse_field("d_xi", chart)], [parse_field("xi*d_xi", chart)], "vect01")


def vect03_input(with_euler: bool = False) -> ProlongationInput:
    from cvect.exceptional.basis import euler, g0, g_minus1
    from cvect.superpoly import CHART_43

    g_0 = list(g0().values()) + ([euler()] if with_euler else [])
    return ProlongationInput(CHART_43, list(g_minus1().values()), g_0,
                             "cvect03" if with_euler else "vect03")


STANDARD_INPUTS = {
    "vect1": vect1_input,
    "vect01": odd_line_input,
    "vect03": lambda: vect03_input(False),
    "cvect03": lambda: vect03_input(True),
}


def timed_prolong(inp: ProlongationInput, max_degree: int, check_closure: bool = True):
    t0 = time.perf_counter()
    comps = prolong_to(inp, max_degree, check_closure)
    return comps, time.perf_counter() - t0
