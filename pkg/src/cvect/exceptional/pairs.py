"""Glued pairs ``(f, g)`` standing for ``i1(f) + i2(g)``.

Both slots are generating functions on the (3|3) chart without constant term.
The two images overlap along sle°(3): for ``g`` with ``Delta g = 0`` and
``D3 g = 0`` one has ``i2(g) = i1((-1)^{p(g)+1} R g)``, so pairs are compared
through their realized fields, and :func:`canonicalize` picks one
representative by pushing the sle° part of ``g`` into the first slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from cvect.buttin import d3xi, delta, delta_inv, gf, sle_classify, SleClass, xi123
from cvect.exceptional.embeddings import i1_field, i2_field
from cvect.exceptional.membership import in_cvect
from cvect.linalg import EchelonBasis
from cvect.sampling import monomials
from cvect.superpoly import CHART_33, CHART_43, MixedParityError, Monomial, SuperPoly, mul
from cvect.superfield import SuperField


class NotInCvectError(ValueError):
    pass


class NotSleZeroError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GluedPair:
    f: SuperPoly
    g: SuperPoly

    def __post_init__(self):
        object.__setattr__(self, "f", gf(self.f))
        object.__setattr__(self, "g", gf(self.g))

    @classmethod
    def zero(cls) -> GluedPair:
        z = SuperPoly.zero(CHART_33)
        return cls(z, z)

    @classmethod
    def parse(cls, text: str) -> GluedPair:
        from cvect.expr import parse_poly, split_pair

        a, b = split_pair(text)
        return cls(parse_poly(a, CHART_33), parse_poly(b, CHART_33))

    def realize(self) -> SuperField:
        return realize_pair(self)

    def canonical(self) -> GluedPair:
        return canonicalize(self)

    def __add__(self, other: GluedPair) -> GluedPair:
        return GluedPair(self.f + other.f, self.g + other.g)

    def __neg__(self) -> GluedPair:
        return GluedPair(-self.f, -self.g)

    def __sub__(self, other: GluedPair) -> GluedPair:
        return self + (-other)

    def scale(self, c) -> GluedPair:
        return GluedPair(self.f.scale(c), self.g.scale(c))

    def is_zero(self) -> bool:
        return not self.realize()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, GluedPair):
            return NotImplemented
        return self.realize() == other.realize()

    def __hash__(self):
        c = canonicalize(self)
        return hash((c.f, c.g))

    def same_slots(self, other: GluedPair) -> bool:
        """Syntactic equality of the two slots."""
        return self.f == other.f and self.g == other.g

    def __str__(self):
        from cvect.expr import format_poly

        return f"({format_poly(self.f)}, {format_poly(self.g)})"

    def __repr__(self):
        return f"GluedPair{self}"


def realize_pair(p: GluedPair) -> SuperField:
    return i1_field(p.f) + i2_field(p.g)


# -- regrading and the automorphism phi -------------------------------------

def regrade(f: SuperPoly) -> SuperPoly:
    """The regrading map R on sle°(3), case by case on the odd degree."""
    f = gf(f)
    if sle_classify(f) is not SleClass.SLE_DEGREE:
        raise NotSleZeroError("regrade is defined on sle°(3) (Delta f = 0 and D3 f = 0)")
    out = SuperPoly.zero(CHART_33)
    for k, part in f.odd_degree_parts().items():
        if k == 0:
            out = out + delta(mul(part, xi123(CHART_33)))
        elif k == 1:
            out = out + part
        elif k == 2:
            out = out + d3xi(delta_inv(part))
        else:
            raise NotSleZeroError("sle°(3) has no component of odd degree 3")
    return out


def _signed_regrade(s: SuperPoly) -> SuperPoly:
    # (-1)^{p(s)+1} R(s), the f-slot partner of (0, s)
    out = SuperPoly.zero(CHART_33)
    for p, sp in s.parity_parts().items():
        r = regrade(sp)
        out = out + (r if p else -r)
    return out


def phi_auto(p: GluedPair) -> GluedPair:
    """``phi(f, g) = (g, (-1)^{p(f)+1} f)``, applied to each parity part of ``f``."""
    f_new = SuperPoly.zero(CHART_33)
    for par, fp in p.f.parity_parts().items():
        f_new = f_new + (fp if par else -fp)
    return GluedPair(p.g, f_new)


# -- canonical form ------------------------------------------------------------

@lru_cache(maxsize=None)
def sle_zero_basis(deg_u: int, deg_xi: int) -> EchelonBasis:
    """Echelon basis of the bidegree-``(deg_u, deg_xi)`` part of sle°(3)."""
    mons = monomials(CHART_33, deg_u, deg_xi)
    columns = []
    for m in mons:
        f = SuperPoly(CHART_33, {m: 1})
        col = {(0, k): c for k, c in delta(f).terms.items()}
        col.update({(1, k): c for k, c in d3xi(f).terms.items()})
        columns.append(col)
    kernel = EchelonBasis(columns, track=True).relations
    return EchelonBasis({mons[j]: c for j, c in rel.items()} for rel in kernel)


def sle_zero_dim(deg_u: int, deg_xi: int) -> int:
    return sle_zero_basis(deg_u, deg_xi).rank


def sle_zero_part(g: SuperPoly) -> SuperPoly:
    """Projection of ``g`` onto sle°(3) along the echelon complement, per bidegree."""
    out: dict[Monomial, Fraction] = {}
    for (du, dx), part in g.components().items():
        out.update(sle_zero_basis(du, dx).project(dict(part.terms)))
    return SuperPoly(CHART_33, out)


def canonicalize(p: GluedPair) -> GluedPair:
    s = sle_zero_part(p.g)
    if not s:
        return p
    return GluedPair(p.f + _signed_regrade(s), p.g - s)


# -- decomposition ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _degree_solver(k: int) -> tuple[EchelonBasis, tuple]:
    """Tracked echelon basis of all pair-monomial images in field degree ``k``."""
    labels = []
    for dx in range(4):
        if k + 1 + dx > 0 and k + 1 >= 0:
            labels.extend(("f", m) for m in monomials(CHART_33, k + 1, dx))
    total = k + 2
    for dx in range(min(total, 3) + 1):
        if total - dx >= 0 and total > 0:
            labels.extend(("g", m) for m in monomials(CHART_33, total - dx, dx))
    eb = EchelonBasis(track=True)
    for i, (slot, m) in enumerate(labels):
        poly = SuperPoly(CHART_33, {m: 1})
        D = i1_field(poly) if slot == "f" else i2_field(poly)
        eb.add(D.to_vector(), label=i)
    return eb, tuple(labels)


def pair_degree_images(k: int) -> tuple[list[SuperField], list[SuperField]]:
    """Images of all degree-``k`` monomials under ``i1`` and under ``i2``."""
    _, labels = _degree_solver(k)
    ones = [(s, SuperPoly(CHART_33, {m: 1})) for s, m in labels]
    return ([i1_field(p) for s, p in ones if s == "f"], [i2_field(p) for s, p in ones if s == "g"])


def decompose(D: SuperField) -> GluedPair:
    """A canonical pair realizing ``D``; raises if ``D`` is not in cvect(0|3)_*."""
    if not D.chart.same_coordinates(CHART_43):
        raise NotInCvectError("decompose expects a field on the (4|3) chart")
    if not in_cvect(D):
        raise NotInCvectError(f"{D} does not satisfy the defining system")
    f = SuperPoly.zero(CHART_33)
    g = SuperPoly.zero(CHART_33)
    for k, part in D.weight_parts().items():
        if k < -1:
            raise NotInCvectError(f"component of degree {k}")
        eb, labels = _degree_solver(k)
        coeffs = eb.express(part.to_vector())
        if coeffs is None:
            raise NotInCvectError(f"degree-{k} component is not a realized pair")
        for i, c in coeffs.items():
            slot, m = labels[i]
            term = SuperPoly(CHART_33, {m: c})
            if slot == "f":
                f = f + term
            else:
                g = g + term
    return canonicalize(GluedPair(f, g))


def require_homogeneous(f: SuperPoly) -> int:
    if not f.is_homogeneous():
        raise MixedParityError("slot must be parity-homogeneous")
    return f.parity
