"""Polynomial vector superfields: action, super-commutator and divergence."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from cvect.superpoly import (
    EVEN,
    ODD,
    Chart,
    ChartMismatchError,
    MixedParityError,
    Monomial,
    SuperPoly,
    Rational,
    mul,
    partial,
    reorder_sign,
)


class SuperField:
    """``sum(coefficient[v] * d_v)`` over the coordinates ``v`` of a chart.

    Coefficients sit to the left of the derivations.  Only nonzero components
    are stored.  Mixed-parity fields are allowed as containers; bracket and
    divergence split them into homogeneous parts first.
    """

    __slots__ = ("chart", "_comps")

    def __init__(self, chart: Chart, components: Mapping[str, SuperPoly] | None = None):
        self.chart = chart
        comps = {}
        for name in chart.names:
            c = (components or {}).get(name)
            if c is None or c.is_zero():
                continue
            if c.chart != chart:
                raise ChartMismatchError(f"component on {c.chart}, field on {chart}")
            comps[name] = c
        extra = set(components or ()) - set(chart.names)
        if extra:
            raise ChartMismatchError(f"directions {sorted(extra)} not in chart {chart}")
        self._comps = comps

    @classmethod
    def zero(cls, chart: Chart) -> SuperField:
        return cls(chart)

    @classmethod
    def basis(cls, chart: Chart, name: str) -> SuperField:
        """The constant field ``d_name``."""
        return cls(chart, {name: SuperPoly.const(chart, 1)})

    # -- access -----------------------------------------------------------
    def coefficient(self, name: str) -> SuperPoly:
        self.chart.var(name)
        return self._comps.get(name) or SuperPoly.zero(self.chart)

    __getitem__ = coefficient

    @property
    def components(self) -> dict[str, SuperPoly]:
        return dict(self._comps)

    def is_zero(self) -> bool:
        return not self._comps

    def __bool__(self):
        return bool(self._comps)

    def __eq__(self, other):
        if not isinstance(other, SuperField):
            return NotImplemented
        return self.chart.same_coordinates(other.chart) and self._comps == other._comps

    def __hash__(self):
        return hash((self.chart.names, tuple(sorted(self._comps.items(), key=lambda t: t[0]))))

    def _check(self, other):
        if self.chart != other.chart:
            raise ChartMismatchError(f"chart mismatch: {self.chart} vs {other.chart}")

    # -- linear structure -------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, SuperField):
            return NotImplemented
        self._check(other)
        comps = dict(self._comps)
        for n, c in other._comps.items():
            comps[n] = comps[n] + c if n in comps else c
        return SuperField(self.chart, comps)

    def __neg__(self):
        return SuperField(self.chart, {n: -c for n, c in self._comps.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Rational) -> SuperField:
        return SuperField(self.chart, {n: p.scale(c) for n, p in self._comps.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        # left multiplication by a function: f * (sum c_v d_v) = sum (f c_v) d_v
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, SuperPoly):
            return SuperField(self.chart, {n: mul(other, c) for n, c in self._comps.items()})
        return NotImplemented

    # -- gradings ---------------------------------------------------------
    def _term_parities(self):
        for n, c in self._comps.items():
            pv = self.chart.var(n).parity
            for m in c.terms:
                yield m.parity ^ pv

    @property
    def parity(self) -> int:
        ps = set(self._term_parities())
        if len(ps) > 1:
            raise MixedParityError("field has mixed parity")
        return ps.pop() if ps else EVEN

    def is_homogeneous(self) -> bool:
        return len(set(self._term_parities())) <= 1

    def parity_parts(self) -> dict[int, SuperField]:
        parts: dict[int, dict[str, SuperPoly]] = {}
        for n, c in self._comps.items():
            pv = self.chart.var(n).parity
            for p, cp in c.parity_parts().items():
                parts.setdefault(p ^ pv, {})[n] = cp
        return {p: SuperField(self.chart, comps) for p, comps in sorted(parts.items())}

    def weight_parts(self, weights: Mapping[str, int] | None = None) -> dict[int, SuperField]:
        w = self.chart.weights if weights is None else {**self.chart.weights, **weights}
        parts: dict[int, dict[str, SuperPoly]] = {}
        for n, c in self._comps.items():
            for k, cp in c.weight_parts(w).items():
                parts.setdefault(k - w[n], {})[n] = cp
        return {k: SuperField(self.chart, comps) for k, comps in sorted(parts.items())}

    @property
    def degree(self) -> int:
        """Weight degree under the chart weights; the field must be homogeneous."""
        parts = self.weight_parts()
        if len(parts) > 1:
            raise ValueError(f"field is not weight-homogeneous (degrees {sorted(parts)})")
        return next(iter(parts)) if parts else 0

    # -- linear-algebra view ----------------------------------------------
    def to_vector(self) -> dict[tuple[int, Monomial], Fraction]:
        idx = {n: i for i, n in enumerate(self.chart.names)}
        return {(idx[n], m): c for n, p in self._comps.items() for m, c in p.terms.items()}

    @classmethod
    def from_vector(cls, chart: Chart, vec: Mapping[tuple[int, Monomial], Rational]) -> SuperField:
        names = chart.names
        comps: dict[str, dict] = {}
        for (i, m), c in vec.items():
            comps.setdefault(names[i], {})[m] = c
        return cls(chart, {n: SuperPoly(chart, t) for n, t in comps.items()})

    # -- action -----------------------------------------------------------
    def apply(self, f: SuperPoly) -> SuperPoly:
        return apply(self, f)

    def __call__(self, f: SuperPoly) -> SuperPoly:
        return apply(self, f)

    def __repr__(self):
        from cvect.expr import format_field

        return f"SuperField({format_field(self)!r})"

    def __str__(self):
        from cvect.expr import format_field

        return format_field(self)


def coordinate(chart: Chart, name: str) -> SuperPoly:
    return SuperPoly.var(chart, name)


def field_from(chart: Chart, **components: SuperPoly | Rational) -> SuperField:
    comps = {}
    for n, c in components.items():
        comps[n] = c if isinstance(c, SuperPoly) else SuperPoly.const(chart, c)
    return SuperField(chart, comps)


def apply(D: SuperField, f: SuperPoly) -> SuperPoly:
    """Leibniz action ``D(f) = sum(c_v * d_v f)``."""
    if D.chart != f.chart:
        raise ChartMismatchError(f"chart mismatch: {D.chart} vs {f.chart}")
    out = SuperPoly.zero(f.chart)
    for n, c in D._comps.items():
        d = partial(f, n)
        if d:
            out = out + mul(c, d)
    return out


def _homogeneous_pairs(D1: SuperField, D2: SuperField):
    if D1.chart != D2.chart:
        raise ChartMismatchError(f"chart mismatch: {D1.chart} vs {D2.chart}")
    for p1, A in D1.parity_parts().items():
        for p2, B in D2.parity_parts().items():
            yield p1, A, p2, B


def commutator(D1: SuperField, D2: SuperField) -> SuperField:
    """Super-commutator ``D1 D2 - (-1)^{p1 p2} D2 D1`` via the coefficient formula."""
    chart = D1.chart
    names = chart.names
    parity_of = [chart.var(n).parity for n in names]
    index = {n: i for i, n in enumerate(names)}
    n_even = len(chart.even)
    acc: dict[str, dict[Monomial, Fraction]] = {}

    def add(target, m, c):
        bucket = acc.setdefault(target, {})
        s = bucket.get(m, 0) + c
        if s:
            bucket[m] = s
        else:
            del bucket[m]

    def act(a_terms, v, b_terms, target, sign):
        # sign * (a d_v)(b) placed on d_target, working monomial by monomial
        vi = index[v]
        if parity_of[vi] == ODD:
            bit = 1 << (vi - n_even)
            below = bit - 1
            for (e2, m2), c2 in b_terms:
                if not m2 & bit:
                    continue
                dm = m2 ^ bit
                dc = -c2 if bin(m2 & below).count("1") & 1 else c2
                for (e1, m1), c1 in a_terms:
                    if m1 & dm:
                        continue
                    c = sign * c1 * dc * reorder_sign(m1, dm)
                    add(target, Monomial(tuple(x + y for x, y in zip(e1, e2)), m1 | dm), c)
        else:
            for (e2, m2), c2 in b_terms:
                k = e2[vi]
                if not k:
                    continue
                de = list(e2)
                de[vi] = k - 1
                for (e1, m1), c1 in a_terms:
                    if m1 & m2:
                        continue
                    c = sign * k * c1 * c2 * reorder_sign(m1, m2)
                    add(target, Monomial(tuple(x + y for x, y in zip(e1, de)), m1 | m2), c)

    for p1, A, p2, B in _homogeneous_pairs(D1, D2):
        s = -1 if p1 & p2 else 1
        for v, a in A._comps.items():
            a_terms = list(a.terms.items())
            for w, b in B._comps.items():
                act(a_terms, v, list(b.terms.items()), w, 1)
        for w, b in B._comps.items():
            b_terms = list(b.terms.items())
            for v, a in A._comps.items():
                act(b_terms, w, list(a.terms.items()), v, -s)
    return SuperField(chart, {n: SuperPoly._raw(chart, t) for n, t in acc.items() if t})


def commutator_oracle(D1: SuperField, D2: SuperField) -> SuperField:
    """Super-commutator by composing the two derivations on each coordinate function."""
    chart = D1.chart
    out = SuperField.zero(chart)
    for p1, A, p2, B in _homogeneous_pairs(D1, D2):
        s = -1 if p1 & p2 else 1
        comps = {}
        for n in chart.names:
            x = coordinate(chart, n)
            comps[n] = apply(A, apply(B, x)) - apply(B, apply(A, x)).scale(s)
        out = out + SuperField(chart, comps)
    return out


def div(D: SuperField) -> SuperPoly:
    """Superdivergence ``sum d_u f_u - (-1)^{p(D)} sum d_xi g_xi``."""
    p = D.parity
    out = SuperPoly.zero(D.chart)
    odd_sign = 1 if p else -1
    for n, c in D._comps.items():
        d = partial(c, n)
        out = out + (d if D.chart.var(n).parity == EVEN else d.scale(odd_sign))
    return out


def graded_components(D: SuperField, weights: Mapping[str, int] | None = None) -> list[tuple[int, SuperField]]:
    """Split ``D`` by weight of coefficient monomial minus weight of direction."""
    return list(D.weight_parts(weights).items())


def linear_combination(terms: Iterable[tuple[Rational, SuperField]], chart: Chart) -> SuperField:
    out: dict[str, list] = {}
    for c, D in terms:
        if not c:
            continue
        for n, p in D._comps.items():
            out.setdefault(n, []).append((c, p))
    from cvect.superpoly import combine

    return SuperField(chart, {n: combine(t) for n, t in out.items()})


@dataclass(frozen=True)
class GradedComponent:
    """One graded piece of a prolongation: a basis of fields of a fixed degree."""

    degree: int
    basis: tuple[SuperField, ...]

    @property
    def dims(self) -> tuple[int, int]:
        even = sum(1 for b in self.basis if b.parity == EVEN)
        return even, len(self.basis) - even

    def __len__(self):
        return len(self.basis)

    def __str__(self):
        e, o = self.dims
        return f"g_{self.degree}: ({e}|{o})"
