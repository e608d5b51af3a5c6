"""Text grammar for polynomials, fields and glued pairs.

Grammar (ASCII only)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('-' | '+') unary | power
    power   := atom ('^' INT)?
    atom    := INT | NAME | 'd_' NAME | '(' expr ')'

Variables are the chart coordinates (``u1 u2 u3 y`` even, ``x1 x2 x3`` odd).
``d_v`` is the derivation along ``v``; a field is a sum of ``coefficient * d_v``
with the derivation as the rightmost factor.  Division is only by nonzero
constants.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from cvect.superpoly import CHART_43, Chart, Monomial, SuperPoly
from cvect.superfield import SuperField


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos}" + (f": {text!r}" if text else ""))
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|(d_[A-Za-z_][A-Za-z0-9_]*)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^(),]))")


@dataclass
class _Tok:
    kind: str  # int, dvar, name, op, end
    value: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", pos, text)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(_Tok("int", m.group(1), start))
        elif m.group(2):
            toks.append(_Tok("dvar", m.group(2)[2:], start))
        elif m.group(3):
            toks.append(_Tok("name", m.group(3), start))
        else:
            op = "^" if m.group(4) == "**" else m.group(4)
            toks.append(_Tok("op", op, start))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


Value = Union[SuperPoly, SuperField]


class _Parser:
    def __init__(self, text: str, chart: Chart):
        self.text = text
        self.chart = chart
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.pos, self.text)

    def parse(self) -> Value:
        v = self.expr()
        if self.peek().kind != "end":
            self.fail("unexpected token")
        return v

    def expr(self) -> Value:
        v = self.term()
        while self.peek().kind == "op" and self.peek().value in "+-":
            tok = self.take()
            rhs = self.term()
            v = self._add(v, rhs if tok.value == "+" else -rhs, tok)
        return v

    def _add(self, a: Value, b: Value, tok: _Tok) -> Value:
        if isinstance(a, SuperField) and isinstance(b, SuperPoly):
            a, b = b, a
        if isinstance(a, SuperPoly) and isinstance(b, SuperField):
            if a.is_zero():
                return b
            self.fail("cannot add a function and a vector field", tok)
        return a + b

    def term(self) -> Value:
        v = self.unary()
        while self.peek().kind == "op" and self.peek().value in "*/":
            tok = self.take()
            rhs = self.unary()
            if tok.value == "/":
                if not isinstance(rhs, SuperPoly) or not rhs.is_constant() or rhs.is_zero():
                    self.fail("division only by nonzero constants", tok)
                v = v.scale(1 / rhs.constant_term())
                continue
            if isinstance(v, SuperField):
                if isinstance(rhs, SuperPoly) and rhs.is_constant():
                    v = v.scale(rhs.constant_term())
                    continue
                self.fail("a derivation must be the rightmost factor", tok)
            v = v * rhs
        return v

    def unary(self) -> Value:
        t = self.peek()
        if t.kind == "op" and t.value in "+-":
            self.take()
            v = self.unary()
            return -v if t.value == "-" else v
        return self.power()

    def power(self) -> Value:
        base = self.atom()
        if self.peek().kind == "op" and self.peek().value == "^":
            op = self.take()
            e = self.take()
            if e.kind != "int":
                self.fail("exponent must be a nonnegative integer", e)
            k = int(e.value)
            if isinstance(base, SuperField):
                self.fail("cannot raise a vector field to a power", op)
            if k > 1 and self._is_odd_atom(base):
                self.fail("odd variables admit exponent 1 only", op)
            return base ** k
        return base

    def _is_odd_atom(self, p: SuperPoly) -> bool:
        if len(p) != 1:
            return False
        m = next(iter(p.terms))
        return m.odd_degree == 1 and m.even_degree == 0

    def atom(self) -> Value:
        t = self.take()
        if t.kind == "int":
            return SuperPoly.const(self.chart, int(t.value))
        if t.kind == "name":
            if t.value not in self.chart:
                self.fail(f"unknown variable {t.value!r}", t)
            return SuperPoly.var(self.chart, t.value)
        if t.kind == "dvar":
            if t.value not in self.chart:
                self.fail(f"unknown derivation d_{t.value}", t)
            return SuperField.basis(self.chart, t.value)
        if t.kind == "op" and t.value == "(":
            v = self.expr()
            if self.take().value != ")":
                self.fail("expected ')'", self.toks[self.i - 1])
            return v
        self.fail("unexpected token", t)


def parse_expr(text: str, chart: Chart = CHART_43) -> Value:
    return _Parser(text, chart).parse()


def parse_poly(text: str, chart: Chart = CHART_43) -> SuperPoly:
    v = parse_expr(text, chart)
    if not isinstance(v, SuperPoly):
        raise ParseError("expected a polynomial, got a vector field", 0, text)
    return v


def parse_field(text: str, chart: Chart = CHART_43) -> SuperField:
    v = parse_expr(text, chart)
    if isinstance(v, SuperPoly):
        if v.is_zero():
            return SuperField.zero(chart)
        raise ParseError("expected a vector field, got a polynomial", 0, text)
    return v


def split_pair(text: str) -> tuple[str, str]:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError("a pair is written '(f, g)'", 0, text)
    inner = s[1:-1]
    depth = 0
    for i, ch in enumerate(inner):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return inner[:i], inner[i + 1:]
    raise ParseError("a pair needs two comma-separated slots", 0, text)


# -- printing ---------------------------------------------------------------

def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(chart: Chart, m: Monomial) -> str:
    parts = []
    for name, k in zip(chart.even, m.even):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    parts.extend(chart.odd[j] for j in m.odd_indices())
    return "*".join(parts)


def format_poly(f: SuperPoly) -> str:
    if f.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(f.sorted_items()):
        mono = format_monomial(f.chart, m)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = _fmt_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_rational(a)}*{mono}"
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def format_field(D: SuperField) -> str:
    if D.is_zero():
        return "0"
    out = []
    for n in D.chart.names:
        c = D.coefficient(n)
        if c.is_zero():
            continue
        if len(c) == 1:
            s = format_poly(c)
            neg = s.startswith("-")
            s = s[1:] if neg else s
            body = f"d_{n}" if s == "1" else f"{s}*d_{n}"
        else:
            neg = False
            body = f"({format_poly(c)})*d_{n}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def field_record(D: SuperField) -> dict:
    """Structured form; on the (4|3) chart this is ``{P: [...], Q: [...], R: ...}``."""
    chart = D.chart
    if chart.same_coordinates(CHART_43):
        return {
            "P": [format_poly(D.coefficient(n)) for n in chart.odd],
            "Q": [format_poly(D.coefficient(n)) for n in ("u1", "u2", "u3")],
            "R": format_poly(D.coefficient("y")),
        }
    return {"components": {n: format_poly(D.coefficient(n)) for n in chart.names}}


def format_value(value, structured: bool = False) -> str:
    from cvect.exceptional.pairs import GluedPair

    if isinstance(value, GluedPair):
        if structured:
            return json.dumps({"f": format_poly(value.f), "g": format_poly(value.g)})
        return f"({format_poly(value.f)}, {format_poly(value.g)})"
    if isinstance(value, SuperField):
        return json.dumps(field_record(value)) if structured else format_field(value)
    if isinstance(value, SuperPoly):
        return json.dumps({"poly": format_poly(value)}) if structured else format_poly(value)
    raise TypeError(f"cannot format {type(value).__name__}")
