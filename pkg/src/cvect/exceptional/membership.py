"""First-order constant-coefficient system cutting cvect(0|3)_* out of vect(4|3).

Writing ``D = sum(P_i d_{x_i} + Q_i d_{u_i}) + R d_y`` and ``s = (-1)^{p(D)}``:

* eq1: ``dQ_i/du_j + s dP_j/dx_i = 0`` for ``i != j``
* eq2: ``dQ_i/du_i + s dP_i/dx_i = (sum_j dQ_j/du_j + dR/dy) / 2``
* eq3: ``dQ_i/dx_j + dQ_j/dx_i = 0``
* eq4: ``dP_i/du_j - dP_j/du_i = -s dR/dx_k`` for cyclic ``(i, j, k)``
* eq5: ``dQ_i/dy = 0``
* eq6: ``dP_k/dy = s (dQ_i/dx_j - dQ_j/dx_i) / 2`` for cyclic ``(i, j, k)``
* eq7: ``dR/dy - sum_i dQ_i/du_i = 0`` (only for the ``vect`` variant)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from cvect.buttin import CYCLIC, U, XI
from cvect.superpoly import CHART_43, ChartMismatchError, SuperPoly, partial
from cvect.superfield import SuperField

EQUATIONS = ("eq1", "eq2", "eq3", "eq4", "eq5", "eq6", "eq7")
CVECT_EQUATIONS = EQUATIONS[:6]
HALF = Fraction(1, 2)


@dataclass
class MembershipReport:
    variant: str
    results: dict[str, bool]
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.results[e] for e in self._checked)

    @property
    def _checked(self):
        return EQUATIONS if self.variant == "vect" else CVECT_EQUATIONS

    def __bool__(self):
        return self.ok

    def failed(self) -> list[str]:
        return [e for e in EQUATIONS if not self.results[e]]


def equation_residuals(D: SuperField) -> dict[str, list[tuple[str, SuperPoly]]]:
    """Left-minus-right side of every equation instance, keyed by equation."""
    if not D.chart.same_coordinates(CHART_43):
        raise ChartMismatchError("membership is defined on the (4|3) chart")
    s = -1 if D.parity else 1
    P = [D.coefficient(x) for x in XI]
    Q = [D.coefficient(u) for u in U]
    R = D.coefficient("y")
    d = partial
    out: dict[str, list] = {e: [] for e in EQUATIONS}
    div_q = d(Q[0], U[0]) + d(Q[1], U[1]) + d(Q[2], U[2])
    for i in range(3):
        for j in range(3):
            if i != j:
                out["eq1"].append((f"i={i + 1},j={j + 1}", d(Q[i], U[j]) + d(P[j], XI[i]).scale(s)))
    rhs2 = (div_q + d(R, "y")).scale(HALF)
    for i in range(3):
        out["eq2"].append((f"i={i + 1}", d(Q[i], U[i]) + d(P[i], XI[i]).scale(s) - rhs2))
    for i in range(3):
        for j in range(i, 3):
            out["eq3"].append((f"i={i + 1},j={j + 1}", d(Q[i], XI[j]) + d(Q[j], XI[i])))
    for i, j, k in CYCLIC:
        out["eq4"].append((f"k={k + 1}", d(P[i], U[j]) - d(P[j], U[i]) + d(R, XI[k]).scale(s)))
    for i in range(3):
        out["eq5"].append((f"i={i + 1}", d(Q[i], "y")))
    for i, j, k in CYCLIC:
        rhs = (d(Q[i], XI[j]) - d(Q[j], XI[i])).scale(s * HALF)
        out["eq6"].append((f"k={k + 1}", d(P[k], "y") - rhs))
    out["eq7"].append(("", d(R, "y") - div_q))
    return out


def membership(D: SuperField, variant: str = "cvect") -> MembershipReport:
    """Check the defining system; ``variant="vect"`` adds eq7.

    Raises :class:`~cvect.superpoly.MixedParityError` for mixed-parity fields.
    """
    if variant not in ("cvect", "vect"):
        raise ValueError(f"unknown variant {variant!r}")
    residuals = equation_residuals(D)
    results = {}
    violations = []
    for eq, items in residuals.items():
        bad = [label for label, r in items if r]
        results[eq] = not bad
        if variant == "vect" or eq != "eq7":
            violations.extend(f"{eq}[{b}]" if b else eq for b in bad)
    return MembershipReport(variant, results, violations)


def in_cvect(D: SuperField) -> bool:
    return all(membership(part).ok for part in D.parity_parts().values())


def in_vect(D: SuperField) -> bool:
    return all(membership(part, "vect").ok for part in D.parity_parts().values())
