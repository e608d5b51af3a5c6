"""Command-line interface.

Exit codes: 0 on success, 1 when a computed identity fails (table or bracket
disagrees with the oracle, selftest failure), 2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Iterable

from cvect.expr import ParseError, format_poly, format_value, parse_field, parse_poly, split_pair
from cvect.superpoly import CHART_33, CHART_43, ChartMismatchError, MixedParityError, UnknownVariableError

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- input helpers ---------------------------------------------------------------

def _poly(text: str):
    return parse_poly(text, CHART_33)


def _field(text: str):
    from cvect.exceptional.basis import named_fields

    key = text.strip()
    named = named_fields()
    if key in named:
        return named[key]
    return parse_field(text, CHART_43)


def _pair(text: str):
    from cvect.exceptional.pairs import GluedPair

    return GluedPair.parse(text)


def _is_pair(text: str) -> bool:
    try:
        split_pair(text)
    except ParseError:
        return False
    return True


def _inputs(args, attr: str) -> list[str]:
    value = getattr(args, attr, None)
    items = [value] if value is not None else []
    if getattr(args, "file", None):
        with open(args.file, encoding="utf-8") as fh:
            items.extend(line.strip() for line in fh if line.strip() and not line.lstrip().startswith("#"))
    if not items:
        raise UsageError(f"--{attr.replace('_', '-')} or --file is required")
    return items


def _emit(value, args) -> None:
    print(format_value(value, structured=args.json))


# -- commands --------------------------------------------------------------------------

def cmd_buttin(args) -> int:
    from cvect.buttin import buttin_bracket

    _emit(buttin_bracket(_poly(args.f), _poly(args.g)), args)
    return EXIT_OK


def _unary(attr: str, parse: Callable, op: Callable) -> Callable:
    def run(args) -> int:
        for text in _inputs(args, attr):
            _emit(op(parse(text)), args)
        return EXIT_OK
    return run


def _ops():
    from cvect.exceptional.embeddings import alpha_field, i1_field, i2_field
    from cvect.exceptional.pairs import decompose, phi_auto, regrade
    from cvect.superfield import div

    return {
        "i1": _unary("f", _poly, i1_field),
        "i2": _unary("f", _poly, i2_field),
        "alpha": _unary("g", _poly, alpha_field),
        "realize": _unary("pair", _pair, lambda p: p.realize()),
        "decompose": _unary("field", _field, decompose),
        "regrade": _unary("f", _poly, regrade),
        "phi": _unary("pair", _pair, phi_auto),
        "div": _unary("field", _field, div),
    }


def cmd_bracket(args) -> int:
    from cvect.superfield import commutator

    left, right = args.left, args.right
    if _is_pair(left) and _is_pair(right):
        from cvect.exceptional.table import bracket_pair, bracket_pair_oracle

        p, q = _pair(left), _pair(right)
        out = bracket_pair(p, q)
        _emit(out, args)
        if args.check and out != bracket_pair_oracle(p, q):
            print("oracle mismatch", file=sys.stderr)
            return EXIT_FALSIFIED
        return EXIT_OK
    if _is_pair(left) or _is_pair(right):
        raise UsageError("bracket needs two pairs or two fields")
    _emit(commutator(_field(left), _field(right)), args)
    return EXIT_OK


def cmd_membership(args) -> int:
    from cvect.exceptional.membership import EQUATIONS, membership

    for text in _inputs(args, "field"):
        D = _field(text)
        reports = [membership(part, args.variant) for part in D.parity_parts().values()]
        results = {e: all(r.results[e] for r in reports) for e in EQUATIONS}
        checked = EQUATIONS if args.variant == "vect" else EQUATIONS[:6]
        violations = [v for r in reports for v in r.violations]
        ok = all(results[e] for e in checked)
        if args.json:
            print(json.dumps({"variant": args.variant, "ok": ok, "results": results, "violations": violations}))
        else:
            for e in EQUATIONS:
                note = "" if e in checked else " (not required)"
                print(f"{e}: {'pass' if results[e] else 'fail'}{note}")
            print(f"member of {args.variant}: {'yes' if ok else 'no'}")
    return EXIT_OK


def cmd_prolong(args) -> int:
    from cvect.prolong import STANDARD_INPUTS, dimension_table, timed_prolong

    if args.input not in STANDARD_INPUTS:
        raise UsageError(f"unknown input {args.input!r}; choose from {', '.join(STANDARD_INPUTS)}")
    comps, seconds = timed_prolong(STANDARD_INPUTS[args.input](), args.max_degree, not args.no_closure)
    rows = dimension_table(comps)
    if args.json:
        for d, e, o in rows:
            print(json.dumps({"degree": d, "even": e, "odd": o}))
    else:
        for d, e, o in rows:
            print(f"g_{d}: ({e}|{o})")
        print(f"time: {seconds:.2f}s")
    if args.basis:
        for c in comps:
            for D in c.basis:
                print(f"g_{c.degree}: {format_value(D, structured=args.json)}")
    return EXIT_OK


def cmd_table(args) -> int:
    from cvect.exceptional.table import mixed_bracket, mixed_bracket_oracle

    f, h = _poly(args.f), _poly(args.h)
    fparts = f.drop_constant().components()
    hparts = h.drop_constant().components()
    status = EXIT_OK
    for df in range(4):
        for dh in range(4):
            fs = [p for (du, dx), p in fparts.items() if dx == df]
            hs = [p for (du, dx), p in hparts.items() if dx == dh]
            from cvect.exceptional.pairs import GluedPair

            total = GluedPair.zero()
            agree = True
            for a in fs:
                for b in hs:
                    val = mixed_bracket(a, b)
                    total = total + val
                    if args.check and val != mixed_bracket_oracle(a, b):
                        agree = False
            if not agree:
                status = EXIT_FALSIFIED
            total = total.canonical()
            if args.json:
                rec = {"cell": [df, dh], "f": format_poly(total.f), "g": format_poly(total.g)}
                if args.check:
                    rec["oracle_agrees"] = agree
                print(json.dumps(rec))
            else:
                mark = "" if not args.check else ("  [oracle ok]" if agree else "  [ORACLE MISMATCH]")
                print(f"({df},{dh}): {total}{mark}")
    return status


DEFAULT_SUITES_EXCLUDED = ("generation",)


def cmd_selftest(args) -> int:
    from cvect.checks import SUITES

    names = args.suite or [n for n in SUITES if n not in DEFAULT_SUITES_EXCLUDED]
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suites {unknown}; choose from {', '.join(SUITES)}")
    failed = 0
    for n in names:
        res = SUITES[n]()
        failed += not res.ok
        if args.json:
            print(json.dumps({"suite": n, "ok": res.ok, "cases": res.cases, "failures": res.failures[:5],
                              "info": res.info}))
        else:
            print(res.summary(), flush=True)
    return EXIT_FALSIFIED if failed else EXIT_OK


# -- parser -------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cvect", description="Exact computations in cvect(0|3)_* inside vect(4|3).")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_, *opts, file=False):
        p = sub.add_parser(name, help=help_)
        for opt, h in opts:
            p.add_argument(opt, help=h)
        if file:
            p.add_argument("--file", help="UTF-8 file with one input per line")
        p.add_argument("--json", action="store_true", help="structured output, one record per line")
        return p

    p = add("bracket", "bracket of two pairs '(f, g)' or of two fields",
            ("--left", "left operand"), ("--right", "right operand"))
    p.add_argument("--check", action="store_true", help="compare pair brackets with the realized commutator")
    add("buttin", "Buttin bracket {f, g}", ("--f", "generating function"), ("--g", "generating function"))
    add("i1", "embedding i1 of a generating function", ("--f", "generating function"), file=True)
    add("i2", "embedding i2 of a generating function", ("--f", "generating function"), file=True)
    add("alpha", "the field alpha_g", ("--g", "generating function"), file=True)
    add("realize", "field i1(f) + i2(g) of a pair", ("--pair", "pair '(f, g)'"), file=True)
    add("decompose", "canonical pair realizing a field", ("--field", "field expression or name"), file=True)
    p = add("membership", "check the defining equations eq1..eq7", ("--field", "field expression or name"), file=True)
    p.add_argument("--variant", choices=("cvect", "vect"), default="cvect")
    add("regrade", "regrading R on sle°(3)", ("--f", "generating function"), file=True)
    add("phi", "automorphism phi(f, g) = (g, (-1)^{p(f)+1} f)", ("--pair", "pair '(f, g)'"), file=True)
    p = add("prolong", "Cartan prolongation dimension table", ("--input", "vect1, vect01, vect03 or cvect03"))
    p.add_argument("--max-degree", type=int, default=1)
    p.add_argument("--no-closure", action="store_true", help="skip the closure verification")
    p.add_argument("--basis", action="store_true", help="also print the basis fields")
    p = add("table", "mixed brackets [i2 f, i1 h] cell by cell", ("--f", "i2 argument"), ("--h", "i1 argument"))
    p.add_argument("--check", action="store_true", help="compare every cell with the realized commutator")
    add("div", "divergence of a field", ("--field", "field expression or name"), file=True)
    p = add("selftest", "run the identity suites")
    p.add_argument("--suite", action="append", help="run only this suite (repeatable)")
    return ap


def main(argv: Iterable[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    handlers = {"bracket": cmd_bracket, "buttin": cmd_buttin, "membership": cmd_membership,
                "prolong": cmd_prolong, "table": cmd_table, "selftest": cmd_selftest}
    handlers.update(_ops())
    required = {"buttin": ("f", "g"), "bracket": ("left", "right"), "table": ("f", "h"), "prolong": ("input",)}
    try:
        for attr in required.get(args.command, ()):
            if getattr(args, attr) is None:
                raise UsageError(f"--{attr} is required")
        return handlers[args.command](args)
    except (UsageError, ParseError, UnknownVariableError, ChartMismatchError, MixedParityError,
            ValueError, ZeroDivisionError, OSError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"cvect {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
