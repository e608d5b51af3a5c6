"""Exact supercommutative polynomials in even and odd (Grassmann) variables.

A monomial is stored as a pair ``(even_exponents, odd_mask)``; bit ``j`` of
``odd_mask`` marks the ``j``-th odd variable of the chart.  Odd factors are kept
in ascending order and the sign produced by reordering is folded into the
coefficient, so ``x2*x1`` is stored as ``-x1*x2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple, Union

EVEN = 0
ODD = 1

Rational = Union[int, Fraction]


class ChartMismatchError(ValueError):
    pass


class MixedParityError(ValueError):
    pass


class UnknownVariableError(KeyError):
    pass


@dataclass(frozen=True)
class Variable:
    name: str
    parity: int
    index: int

    @property
    def is_odd(self) -> bool:
        return self.parity == ODD


@dataclass(frozen=True)
class Chart:
    """Ordered even and odd coordinates with integer grading weights."""

    even: tuple[str, ...]
    odd: tuple[str, ...]
    weight_items: tuple[tuple[str, int], ...] = field(default=(), compare=False)
    _lookup: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = self.even + self.odd
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in chart {names}")
        lookup = {n: Variable(n, EVEN, i) for i, n in enumerate(self.even)}
        lookup.update({n: Variable(n, ODD, j) for j, n in enumerate(self.odd)})
        object.__setattr__(self, "_lookup", lookup)
        unknown = [n for n, _ in self.weight_items if n not in lookup]
        if unknown:
            raise UnknownVariableError(f"weights given for unknown variables {unknown}")

    @classmethod
    def make(cls, even: Iterable[str], odd: Iterable[str],
             weights: Mapping[str, int] | None = None) -> Chart:
        even, odd = tuple(even), tuple(odd)
        w = {n: 1 for n in even + odd}
        if weights:
            w.update(weights)
        return cls(even, odd, tuple((n, w[n]) for n in even + odd))

    def with_weights(self, weights: Mapping[str, int]) -> Chart:
        return Chart.make(self.even, self.odd, {**self.weights, **weights})

    @property
    def weights(self) -> dict[str, int]:
        w = {n: 1 for n in self.even + self.odd}
        w.update(dict(self.weight_items))
        return w

    @property
    def names(self) -> tuple[str, ...]:
        return self.even + self.odd

    @property
    def variables(self) -> list[Variable]:
        return [self._lookup[n] for n in self.names]

    @property
    def dimension(self) -> tuple[int, int]:
        return len(self.even), len(self.odd)

    def var(self, name: str | Variable) -> Variable:
        if isinstance(name, Variable):
            name = name.name
        try:
            return self._lookup[name]
        except KeyError:
            raise UnknownVariableError(f"variable {name!r} is not in chart {self.names}") from None

    def __contains__(self, name) -> bool:
        return name in self._lookup

    def same_coordinates(self, other: Chart) -> bool:
        return self.even == other.even and self.odd == other.odd

    def __str__(self):
        return f"({','.join(self.even)} | {','.join(self.odd)})"


CHART_33 = Chart.make(("u1", "u2", "u3"), ("x1", "x2", "x3"))
CHART_43 = Chart.make(("u1", "u2", "u3", "y"), ("x1", "x2", "x3"))


class Monomial(NamedTuple):
    even: tuple[int, ...]
    odd: int  # bitmask over the chart's odd variables

    @property
    def odd_degree(self) -> int:
        return bin(self.odd).count("1")

    @property
    def even_degree(self) -> int:
        return sum(self.even)

    @property
    def parity(self) -> int:
        return self.odd_degree & 1

    def odd_indices(self) -> list[int]:
        return [j for j in range(self.odd.bit_length()) if self.odd >> j & 1]


@lru_cache(maxsize=None)
def reorder_sign(a: int, b: int) -> int:
    """Sign of moving the odd block ``b`` into ascending order after ``a``."""
    n = 0
    j = 0
    while b >> j:
        if b >> j & 1:
            n += bin(a >> (j + 1)).count("1")
        j += 1
    return -1 if n & 1 else 1


def _sort_key(m: Monomial):
    # graded-lex, highest total degree first
    return (-(m.even_degree + m.odd_degree), tuple(-e for e in m.even),
            tuple(-(m.odd >> j & 1) for j in range(16)))


class SuperPoly:
    """An element of the supercommutative polynomial ring of a chart.

    Instances are immutable; arithmetic returns new objects.  Coefficients are
    :class:`fractions.Fraction`.
    """

    __slots__ = ("chart", "_terms", "_hash")

    def __init__(self, chart: Chart, terms: Mapping[Monomial, Rational] | None = None):
        self.chart = chart
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = Fraction(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, chart: Chart, terms: dict) -> SuperPoly:
        # terms already clean: Monomial keys, nonzero Fraction values
        obj = cls.__new__(cls)
        obj.chart = chart
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, chart: Chart) -> SuperPoly:
        return cls._raw(chart, {})

    @classmethod
    def const(cls, chart: Chart, c: Rational) -> SuperPoly:
        return cls(chart, {Monomial((0,) * len(chart.even), 0): c})

    @classmethod
    def var(cls, chart: Chart, name: str) -> SuperPoly:
        v = chart.var(name)
        if v.is_odd:
            return cls(chart, {Monomial((0,) * len(chart.even), 1 << v.index): 1})
        exps = [0] * len(chart.even)
        exps[v.index] = 1
        return cls(chart, {Monomial(tuple(exps), 0): 1})

    @classmethod
    def monomial(cls, chart: Chart, powers: Mapping[str, int], coeff: Rational = 1) -> SuperPoly:
        """Build ``coeff * prod(v**k)`` with the odd factors taken in chart order."""
        exps = [0] * len(chart.even)
        mask = 0
        for name, k in powers.items():
            v = chart.var(name)
            if v.is_odd:
                if k > 1:
                    return cls.zero(chart)
                if k == 1:
                    mask |= 1 << v.index
            else:
                exps[v.index] += k
        return cls(chart, {Monomial(tuple(exps), mask): coeff})

    # -- basic access -----------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def items(self):
        return self._terms.items()

    def sorted_items(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: _sort_key(t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get(Monomial((0,) * len(self.chart.even), 0), Fraction(0))

    def drop_constant(self) -> SuperPoly:
        key = Monomial((0,) * len(self.chart.even), 0)
        if key not in self._terms:
            return self
        return SuperPoly._raw(self.chart, {m: c for m, c in self._terms.items() if m != key})

    def is_constant(self) -> bool:
        return all(m.odd == 0 and not any(m.even) for m in self._terms)

    def _check(self, other: SuperPoly):
        if self.chart != other.chart:
            raise ChartMismatchError(f"chart mismatch: {self.chart} vs {other.chart}")

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, SuperPoly):
            if isinstance(other, (int, Fraction)):
                other = SuperPoly.const(self.chart, other)
            else:
                return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return SuperPoly._raw(self.chart, out)

    __radd__ = __add__

    def __neg__(self):
        return SuperPoly._raw(self.chart, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SuperPoly.const(self.chart, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Rational) -> SuperPoly:
        if not c:
            return SuperPoly.zero(self.chart)
        c = Fraction(c)
        return SuperPoly._raw(self.chart, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, SuperPoly):
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        out = SuperPoly.const(self.chart, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SuperPoly.const(self.chart, other)
        if not isinstance(other, SuperPoly):
            return NotImplemented
        return self.chart.same_coordinates(other.chart) and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.chart.names, frozenset(self._terms.items())))
        return self._hash

    # -- gradings ---------------------------------------------------------
    @property
    def parity(self) -> int:
        ps = {m.parity for m in self._terms}
        if len(ps) > 1:
            raise MixedParityError(f"polynomial {self} has mixed parity")
        return ps.pop() if ps else EVEN

    def is_homogeneous(self) -> bool:
        return len({m.parity for m in self._terms}) <= 1

    def parity_parts(self) -> dict[int, SuperPoly]:
        parts: dict[int, dict] = {}
        for m, c in self._terms.items():
            parts.setdefault(m.parity, {})[m] = c
        return {p: SuperPoly._raw(self.chart, t) for p, t in sorted(parts.items())}

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(m.even_degree, m.odd_degree) for m in self._terms}

    def components(self) -> dict[tuple[int, int], SuperPoly]:
        """Split into bihomogeneous parts keyed by ``(deg_u, deg_xi)``."""
        parts: dict[tuple[int, int], dict] = {}
        for m, c in self._terms.items():
            parts.setdefault((m.even_degree, m.odd_degree), {})[m] = c
        return {k: SuperPoly._raw(self.chart, t) for k, t in sorted(parts.items())}

    def odd_degree_parts(self) -> dict[int, SuperPoly]:
        parts: dict[int, dict] = {}
        for m, c in self._terms.items():
            parts.setdefault(m.odd_degree, {})[m] = c
        return {k: SuperPoly._raw(self.chart, t) for k, t in sorted(parts.items())}

    def weight_parts(self, weights: Mapping[str, int] | None = None) -> dict[int, SuperPoly]:
        w = self.chart.weights if weights is None else {**self.chart.weights, **weights}
        we = [w[n] for n in self.chart.even]
        wo = [w[n] for n in self.chart.odd]
        parts: dict[int, dict] = {}
        for m, c in self._terms.items():
            k = sum(a * b for a, b in zip(m.even, we)) + sum(wo[j] for j in m.odd_indices())
            parts.setdefault(k, {})[m] = c
        return {k: SuperPoly._raw(self.chart, t) for k, t in sorted(parts.items())}

    # -- misc -------------------------------------------------------------
    def to_chart(self, chart: Chart) -> SuperPoly:
        """Re-express on another chart, matching variables by name."""
        if chart == self.chart:
            return self
        e_map = [chart.var(n) if n in chart else None for n in self.chart.even]
        o_map = [chart.var(n) if n in chart else None for n in self.chart.odd]
        for v in e_map + o_map:
            if v is not None and v.is_odd != (v.name in self.chart.odd):
                raise ChartMismatchError(f"variable {v.name} changes parity between charts")
        out: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            exps = [0] * len(chart.even)
            for i, k in enumerate(m.even):
                if k:
                    if e_map[i] is None:
                        raise ChartMismatchError(f"{self.chart.even[i]} missing from {chart}")
                    exps[e_map[i].index] += k
            idx = []
            for j in m.odd_indices():
                if o_map[j] is None:
                    raise ChartMismatchError(f"{self.chart.odd[j]} missing from {chart}")
                idx.append(o_map[j].index)
            sign = _permutation_sign(idx)
            mask = 0
            for j in idx:
                mask |= 1 << j
            key = Monomial(tuple(exps), mask)
            out[key] = out.get(key, 0) + sign * c
        return SuperPoly(chart, out)

    def __repr__(self):
        from cvect.expr import format_poly

        return f"SuperPoly({format_poly(self)!r})"

    def __str__(self):
        from cvect.expr import format_poly

        return format_poly(self)


def _permutation_sign(seq: list[int]) -> int:
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv & 1 else 1


def combine(terms: Iterable[tuple[Rational, SuperPoly]]) -> SuperPoly:
    """Exact linear combination ``sum(c * f)``."""
    terms = list(terms)
    if not terms:
        raise ValueError("combine needs at least one term to fix the chart")
    chart = terms[0][1].chart
    out: dict[Monomial, Fraction] = {}
    for c, f in terms:
        if f.chart != chart:
            raise ChartMismatchError(f"chart mismatch: {chart} vs {f.chart}")
        if not c:
            continue
        c = Fraction(c)
        for m, v in f._terms.items():
            out[m] = out.get(m, 0) + c * v
    return SuperPoly(chart, out)


def mul(f: SuperPoly, g: SuperPoly) -> SuperPoly:
    f._check(g)
    out: dict[Monomial, Fraction] = {}
    for (e1, m1), c1 in f._terms.items():
        for (e2, m2), c2 in g._terms.items():
            if m1 & m2:
                continue
            c = c1 * c2
            if reorder_sign(m1, m2) < 0:
                c = -c
            key = Monomial(tuple(a + b for a, b in zip(e1, e2)), m1 | m2)
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                del out[key]
    return SuperPoly._raw(f.chart, out)


def partial(f: SuperPoly, v: str | Variable) -> SuperPoly:
    """Left partial derivative.

    For odd ``v`` the variable is first moved to the front of each monomial,
    so ``partial(x1*x2, "x2") == -x1``.
    """
    var = f.chart.var(v)
    out: dict[Monomial, Fraction] = {}
    if var.is_odd:
        bit = 1 << var.index
        below = bit - 1
        for (e, m), c in f._terms.items():
            if m & bit:
                out[Monomial(e, m ^ bit)] = -c if bin(m & below).count("1") & 1 else c
    else:
        i = var.index
        for (e, m), c in f._terms.items():
            k = e[i]
            if k:
                ne = list(e)
                ne[i] = k - 1
                out[Monomial(tuple(ne), m)] = c * k
    return SuperPoly._raw(f.chart, out)


def partials(f: SuperPoly, *names: str) -> SuperPoly:
    """Iterated derivative ``d_{names[0]} d_{names[1]} ... f``; the last name acts first."""
    for n in reversed(names):
        f = partial(f, n)
    return f


def grading(f: SuperPoly):
    """``(parity, deg_u, deg_xi)`` for bihomogeneous ``f``, else its components.

    Even variables (including ``y`` on the (4|3) chart) all count towards
    ``deg_u``.
    """
    comps = f.components()
    if len(comps) <= 1:
        du, dx = next(iter(comps)) if comps else (0, 0)
        return (dx & 1, du, dx)
    return list(comps.values())


def parity(f: SuperPoly) -> int:
    return f.parity
