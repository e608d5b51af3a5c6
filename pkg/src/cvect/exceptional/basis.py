"""Realization of g_{-1} = Pi Lambda(eta1, eta2, eta3)/C and g_0 = der of it in vect(4|3).

Keys are the eta-notation of the elements; values are the field expressions on
the (4|3) chart ``(u1, u2, u3, y | x1, x2, x3)``.
"""

from __future__ import annotations

from functools import lru_cache

from cvect.expr import parse_field
from cvect.superfield import SuperField

G_MINUS1_TEXT = {
    "eta1*eta2*eta3": "-d_y",
    "eta1": "-d_u1",
    "eta2": "-d_u2",
    "eta3": "-d_u3",
    "eta2*eta3": "-d_x1",
    "eta3*eta1": "-d_x2",
    "eta1*eta2": "-d_x3",
}

G0_TEXT = {
    "d_eta1": "-y*d_x1 - x2*d_u3 + x3*d_u2",
    "d_eta2": "-y*d_x2 - x3*d_u1 + x1*d_u3",
    "d_eta3": "-y*d_x3 - x1*d_u2 + x2*d_u1",
    "eta1*d_eta1": "-(u1*d_u1 + x2*d_x2 + x3*d_x3 + y*d_y)",
    "eta2*d_eta2": "-(u2*d_u2 + x1*d_x1 + x3*d_x3 + y*d_y)",
    "eta3*d_eta3": "-(u3*d_u3 + x1*d_x1 + x2*d_x2 + y*d_y)",
    "eta1*d_eta2": "-u2*d_u1 + x1*d_x2",
    "eta2*d_eta3": "-u3*d_u2 + x2*d_x3",
    "eta3*d_eta1": "-u1*d_u3 + x3*d_x1",
    "eta2*d_eta1": "-u1*d_u2 + x2*d_x1",
    "eta3*d_eta2": "-u2*d_u3 + x3*d_x2",
    "eta1*d_eta3": "-u3*d_u1 + x1*d_x3",
    "eta1*eta2*eta3*d_eta1": "-u1*d_y",
    "eta1*eta2*eta3*d_eta2": "-u2*d_y",
    "eta1*eta2*eta3*d_eta3": "-u3*d_y",
    "eta1*eta2*d_eta3": "-u3*d_x3",
    "eta2*eta3*d_eta1": "-u1*d_x1",
    "eta3*eta1*d_eta2": "-u2*d_x2",
    "eta1*eta2*d_eta1": "-u1*d_x3 - x2*d_y",
    "eta2*eta3*d_eta2": "-u2*d_x1 - x3*d_y",
    "eta3*eta1*d_eta3": "-u3*d_x2 - x1*d_y",
    "eta1*eta2*d_eta2": "-u2*d_x3 + x1*d_y",
    "eta2*eta3*d_eta3": "-u3*d_x1 + x2*d_y",
    "eta3*eta1*d_eta1": "-u1*d_x2 + x3*d_y",
}

EULER_TEXT = "u1*d_u1 + u2*d_u2 + u3*d_u3 + x1*d_x1 + x2*d_x2 + x3*d_x3 + y*d_y"

# Degree-1 element outside vect(0|3)_*.  The sign of the x_j x_k d_u terms is the
# one forced by [d_{x_i}, F] = -d_eta_i; the opposite sign (PRINTED_F_TEXT) fails eq6.
F_TEXT = "y*x1*d_x1 + y*x2*d_x2 + y*x3*d_x3 + y^2*d_y + x1*x2*d_u3 + x3*x1*d_u2 + x2*x3*d_u1"
PRINTED_F_TEXT = "y*x1*d_x1 + y*x2*d_x2 + y*x3*d_x3 + y^2*d_y - x1*x2*d_u3 - x3*x1*d_u2 - x2*x3*d_u1"

# [d_y, F]: lies in g_0 + C d but not in g_0
F_Y_TEXT = "x1*d_x1 + x2*d_x2 + x3*d_x3 + 2*y*d_y"


@lru_cache(maxsize=None)
def g_minus1() -> dict[str, SuperField]:
    return {k: parse_field(v) for k, v in G_MINUS1_TEXT.items()}


@lru_cache(maxsize=None)
def g0() -> dict[str, SuperField]:
    return {k: parse_field(v) for k, v in G0_TEXT.items()}


@lru_cache(maxsize=None)
def euler() -> SuperField:
    return parse_field(EULER_TEXT)


@lru_cache(maxsize=None)
def f_element() -> SuperField:
    return parse_field(F_TEXT)


@lru_cache(maxsize=None)
def named_fields() -> dict[str, SuperField]:
    """Every named element: the eta dictionary plus ``d`` and ``F``."""
    out = dict(g_minus1())
    out.update(g0())
    out["d"] = euler()
    out["F"] = f_element()
    out["F_printed"] = parse_field(PRINTED_F_TEXT)
    return out


def d_eta(i: int) -> SuperField:
    return g0()[f"d_eta{i}"]
