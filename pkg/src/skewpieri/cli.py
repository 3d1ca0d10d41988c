"""Command-line front end: ``skewpieri <command> ...`` (or ``python3 -m skewpieri``).

Exit codes: 0 success, 1 verification mismatch, 2 bad input, 3 unsupported request.
JSON output is canonical (sorted keys, no spaces); the schema is in README.md.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import nsym
from .algebra import Basis, Element, Family
from .compositions import format_composition, parse_composition, parse_skew
from .immaculate import (
    expand_in_dual_immaculate,
    expand_in_immaculate,
    expand_in_rs_dual_immaculate,
    expand_in_rs_immaculate,
    to_complete,
    to_fundamental,
    to_monomial,
)
from .pieri import pieri_coeff_case, skew_pieri, verify_skew_pieri
from .tableaux import descent_set, enumerate_sit
from .verify import SUITES, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_UNSUPPORTED = 0, 1, 2, 3


class Unsupported(Exception):
    pass


# basis names accepted by ``expand``
BASES = {
    "M": Basis.M,
    "F": Basis.F,
    "dualimm": Basis.S,
    "rsdualimm": Basis.RS,
    "H": Basis.H,
    "E": Basis.E,
    "imm": Basis.I,
    "rsimm": Basis.RI,
}

_CONVERT = {
    Basis.M: to_monomial,
    Basis.F: to_fundamental,
    Basis.S: expand_in_dual_immaculate,
    Basis.RS: expand_in_rs_dual_immaculate,
    Basis.H: to_complete,
    Basis.E: lambda e: nsym.to_elementary(to_complete(e)),
    Basis.I: expand_in_immaculate,
    Basis.RI: expand_in_rs_immaculate,
}


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _shape_json(shape) -> dict:
    return {"outer": list(shape.outer), "inner": list(shape.inner)}


def _latex_comp(alpha) -> str:
    return "(" + ",".join(map(str, alpha)) + ")" if alpha else r"\emptyset"


def build_element(name: str, index: str) -> Element:
    basis = BASES[name]
    if "/" in index:
        if basis not in (Basis.S, Basis.RS):
            raise Unsupported(f"skew indices are only available for dualimm and rsdualimm, not {name}")
        shape = parse_skew(index)
        if shape.is_straight:
            return Element.basis_element(basis, shape.outer)
        return Element.basis_element(Basis.SKEW_S if basis is Basis.S else Basis.SKEW_RS, shape)
    return Element.basis_element(basis, parse_composition(index))


def expand(source: str, index: str, target: str) -> Element:
    e = build_element(source, index)
    dest = BASES[target]
    if BASES[source].family is not dest.family:
        fam = BASES[source].family.value
        raise Unsupported(f"{source} lives in {fam}; {target} does not")
    return _CONVERT[dest](e)


def _render(e: Element, fmt: str, extra: dict) -> str:
    if fmt == "json":
        return _dump({**extra, "result": e.to_records()})
    if fmt == "latex":
        return e.to_latex()
    return str(e)


def cmd_expand(args) -> int:
    e = expand(args.source, args.index, args.target)
    extra = {"command": "expand", "from": args.source, "index": args.index, "to": args.target}
    print(_render(e, args.format, extra))
    return EXIT_OK


def cmd_skew_pieri(args) -> int:
    if args.s <= 0:
        raise ValueError("-s must be a positive integer")
    shape = parse_skew(args.shape)
    e = skew_pieri(args.s, shape, args.row_strict, args.rule)
    verdict = verify_skew_pieri(args.s, shape, args.row_strict, args.rule) if args.verify else None
    if args.format == "json":
        extra = {
            "command": "skew-pieri",
            "s": args.s,
            "shape": _shape_json(shape),
            "row_strict": args.row_strict,
            "rule": args.rule,
            "verified": verdict,
        }
        print(_render(e, "json", extra))
    else:
        print(_render(e, args.format, {}))
        if verdict is not None:
            print("MATCH" if verdict else "MISMATCH")
    return EXIT_MISMATCH if verdict is False else EXIT_OK


def cmd_pieri_coeff(args) -> int:
    gamma, alpha = parse_composition(args.gamma), parse_composition(args.alpha)
    case = pieri_coeff_case(gamma, args.s, alpha)
    if args.format == "json":
        print(
            _dump(
                {
                    "command": "pieri-coeff",
                    "gamma": list(gamma),
                    "s": args.s,
                    "alpha": list(alpha),
                    "value": case.value,
                    "case": case.case,
                    "j": case.j,
                    "r": case.r,
                    "vector": None if case.vector is None else list(case.vector),
                }
            )
        )
    elif args.format == "latex":
        print(f"c^{{{_latex_comp(gamma)}}}_{{{args.s},{_latex_comp(alpha)}}} = {case.value}")
    else:
        print(f"{case.value:+d}" if case.value else "0")
        print(f"case: {case.case}")
        if case.j is not None:
            print(f"j: {case.j}, r: {case.r}")
        if case.vector is not None:
            print(f"vector: ({format_composition(case.vector)})")
    return EXIT_OK


def cmd_tableaux(args) -> int:
    shape = parse_skew(args.shape)
    tabs = enumerate_sit(shape)
    if args.format == "json":
        rows = [{"rows": T.to_json(), "descents": sorted(descent_set(T))} for T in tabs]
        print(_dump({"command": "tableaux", "shape": _shape_json(shape), "count": len(tabs), "tableaux": rows}))
        return EXIT_OK
    if args.format == "latex":
        raise Unsupported("tableaux has no LaTeX output")
    print(f"{len(tabs)} standard immaculate tableaux of shape {shape}")
    for T in tabs:
        print()
        print(T)
        print("Des =", "{" + ", ".join(map(str, sorted(descent_set(T)))) + "}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.format == "latex":
        raise Unsupported("verify has no LaTeX output")
    res = run_suite(args.suite, args.max)
    if args.format == "json":
        print(
            _dump(
                {
                    "command": "verify",
                    "suite": args.suite,
                    "max": args.max,
                    "checked": res.checked,
                    "failures": [repr(f) for f in res.failures],
                    "notes": res.notes,
                    "ok": res.ok,
                }
            )
        )
    else:
        status = "PASS" if res.ok else "FAIL"
        print(f"{status} {args.suite} (max {args.max}): {res.checked} checks, {len(res.failures)} failures")
        for f in res.failures[:20]:
            print("  failure:", f)
        for note in res.notes:
            print("  note:", note)
    return EXIT_OK if res.ok else EXIT_MISMATCH


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skewpieri", description="Dual immaculate functions and their Pieri rules.")
    fmt = argparse.ArgumentParser(add_help=False)
    group = fmt.add_mutually_exclusive_group()
    group.add_argument("--json", dest="format", action="store_const", const="json", help="canonical JSON output")
    group.add_argument("--latex", dest="format", action="store_const", const="latex", help="LaTeX output")
    fmt.set_defaults(format="plain")

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("expand", parents=[fmt], help="change of basis")
    p.add_argument("--from", dest="source", required=True, choices=sorted(BASES))
    p.add_argument("--index", required=True, help="composition like 1,2 (or 3,2/1 for dualimm, rsdualimm)")
    p.add_argument("--to", dest="target", required=True, choices=sorted(BASES))
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("skew-pieri", parents=[fmt], help="expand S*_(s) S*_{alpha/gamma}")
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--shape", required=True, help="skew shape like 1,2,1/1,1")
    p.add_argument("--row-strict", action="store_true", help="use the row-strict functions")
    p.add_argument("--verify", action="store_true", help="compare with the product computed directly")
    p.add_argument("--rule", choices=("elementary", "strip"), default="elementary")
    p.set_defaults(func=cmd_skew_pieri)

    p = sub.add_parser("pieri-coeff", parents=[fmt], help="the coefficient c^gamma_{s,alpha}")
    p.add_argument("--gamma", required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.set_defaults(func=cmd_pieri_coeff)

    p = sub.add_parser("tableaux", parents=[fmt], help="list standard immaculate tableaux")
    p.add_argument("--shape", required=True)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("verify", parents=[fmt], help="run a brute-force sweep")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--max", type=int, default=5, help="largest degree in the sweep")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Unsupported as exc:
        print(f"skewpieri: unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ValueError as exc:
        print(f"skewpieri: error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
