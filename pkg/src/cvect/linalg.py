"""Sparse exact linear algebra over the rationals.

Vectors are dicts ``key -> Fraction`` with comparable keys; the pivot of a row
is its smallest key, so echelon forms follow the canonical key order and are
reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping

Vector = dict


def _axpy(target: dict, c, src: Mapping) -> None:
    """``target += c * src`` in place, dropping zeros."""
    for k, v in src.items():
        s = target.get(k, 0) + c * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)


class EchelonBasis:
    """Incrementally built fully reduced row-echelon basis.

    With ``track=True`` every row also records how it is expressed through the
    labelled input vectors, so :meth:`express` can write a vector in the span
    as a combination of inputs and :attr:`relations` collects the linear
    dependencies met while adding (a nullspace basis for the inputs).
    """

    def __init__(self, vectors: Iterable[Mapping] = (), track: bool = False):
        self.rows: dict[Hashable, dict] = {}
        self.track = track
        self.combos: dict[Hashable, dict] = {}
        self.relations: list[dict] = []
        for i, v in enumerate(vectors):
            self.add(v, label=i)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: Mapping) -> tuple[dict, dict]:
        """Return ``(residual, used)`` with ``vec = residual + sum(used[p] * rows[p])``.

        The residual has no entries on pivot keys; it is zero iff ``vec`` lies in
        the span.
        """
        residual = dict(vec)
        used = {}
        rows = self.rows
        # rows are fully reduced, so subtracting them never creates new pivot entries
        for k in [k for k in vec if k in rows]:
            c = residual.get(k)
            if c:
                used[k] = c
                _axpy(residual, -c, rows[k])
        return residual, used

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)[0]

    def add(self, vec: Mapping, label: Hashable = None) -> bool:
        residual, used = self.reduce(vec)
        combo: dict = {}
        if self.track:
            combo = {label: Fraction(1)}
            for p, c in used.items():
                _axpy(combo, -c, self.combos[p])
        if not residual:
            if self.track:
                self.relations.append(combo)
            return False
        pivot = min(residual)
        inv = 1 / Fraction(residual[pivot])
        row = {k: v * inv for k, v in residual.items()}
        if self.track:
            combo = {k: v * inv for k, v in combo.items()}
        for p, r in self.rows.items():
            c = r.get(pivot)
            if c:
                _axpy(r, -c, row)
                if self.track:
                    _axpy(self.combos[p], -c, combo)
        self.rows[pivot] = row
        if self.track:
            self.combos[pivot] = combo
        return True

    def express(self, vec: Mapping) -> dict | None:
        """Coefficients over input labels reproducing ``vec``, or ``None`` if outside the span."""
        if not self.track:
            raise ValueError("basis was built without tracking")
        residual, used = self.reduce(vec)
        if residual:
            return None
        out: dict = {}
        for p, c in used.items():
            _axpy(out, c, self.combos[p])
        return out

    def echelon(self) -> list[dict]:
        return [self.rows[p] for p in sorted(self.rows)]

    def project(self, vec: Mapping) -> dict:
        """Component of ``vec`` along the span, w.r.t. the complement of non-pivot coordinates."""
        out: dict = {}
        for k in [k for k in vec if k in self.rows]:
            _axpy(out, vec[k], self.rows[k])
        return out


def rank(vectors: Iterable[Mapping]) -> int:
    return EchelonBasis(vectors).rank


def nullspace(columns: list[Mapping]) -> list[dict]:
    """Basis of ``{c : sum(c[j] * columns[j]) = 0}``, one vector per dependent column."""
    return EchelonBasis(columns, track=True).relations


def rref(vectors: Iterable[Mapping]) -> list[dict]:
    return EchelonBasis(vectors).echelon()
