"""Command-line front end: ``matchroots {mu,classify,enumerate,verify,iso}``.

Graphs are given as graph6 strings or as expressions such as ``F(2)``,
``K(4,3;1)`` or ``5.18 ∪ K_1``.  Exit status is 0 on success, 1 when a
verification finds a counterexample and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from . import verify as v
from .canon import is_isomorphic
from .enumerate import MAX_ENUM_ORDER, EnumError, EnumSpec, enumerate_graphs
from .families import recognize
from .graph import Graph, graph6_encode
from .inputs import InputError, name_graph, parse_graph
from .matching import characteristic_polynomial, is_forest, matching_vector
from .poly import IntPoly, RationalInterval, format_poly, rational_root_in, refine_interval
from .spectrum import RootHandle, root_handles

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2

THEOREMS = v.THEOREM_IDS


class UsageError(Exception):
    pass


def _graph(text: str) -> Graph:
    try:
        return parse_graph(text)
    except InputError as exc:
        raise UsageError(exc.annotate(text.strip())) from None


def _g6(g: Graph) -> str:
    return graph6_encode(g).decode("ascii")


def _emit(obj: dict) -> None:
    print(json.dumps(obj, ensure_ascii=False))


# -- mu -------------------------------------------------------------------------------

def cmd_mu(args: argparse.Namespace) -> int:
    g = _graph(args.graph)
    vec = matching_vector(g)
    out = {
        "graph6": _g6(g),
        "mu": format_poly(vec.polynomial()),
        "matching_vector": list(vec.counts),
        "max_matching": vec.max_matching,
    }
    if args.charpoly:
        out["charpoly"] = format_poly(characteristic_polynomial(g))
        out["forest"] = is_forest(g)
    if args.format == "json":
        _emit(out)
        return EXIT_OK
    print(out["mu"])
    print("matching vector:", " ".join(map(str, vec.counts)))
    print("max matching:", vec.max_matching)
    if args.charpoly:
        print("charpoly:", out["charpoly"])
        print("forest:", "true" if out["forest"] else "false")
    return EXIT_OK


# -- classify ---------------------------------------------------------------------------

def _render_root(h: RootHandle) -> str:
    """``0``, ``-1/2``, ``√5``, ``-√3``; other irrational roots as a 6-digit decimal."""
    iv = h.interval
    if iv.is_point:
        return str(iv.lo)
    square = _rational_square(h)
    sign = "-" if iv.hi <= 0 else ""
    if square is not None:
        body = str(square.numerator) if square.denominator == 1 else f"({square})"
        return f"{sign}√{body}"
    narrow = refine_interval(h.factor, iv, Fraction(1, 10**7))
    return f"≈{float((narrow.lo + narrow.hi) / 2):.6f}"


def _rational_square(h: RootHandle) -> Fraction | None:
    """``theta**2`` when it is rational and the factor is even up to a power of x."""
    c = h.factor.coeffs
    c = c[h.factor.trailing_zeros():]
    if any(c[1::2]):
        return None
    even = IntPoly(c[::2])
    iv = h.interval
    while iv.lo < 0 < iv.hi:
        iv = refine_interval(h.factor, iv, (iv.hi - iv.lo) / 2)
    if iv.is_point:
        return None
    lo, hi = sorted((iv.lo * iv.lo, iv.hi * iv.hi))
    return rational_root_in(even, RationalInterval(lo, hi))


def cmd_classify(args: argparse.Namespace) -> int:
    g = _graph(args.graph)
    if g.n < 1:
        raise UsageError("classify needs at least one vertex")
    mu = matching_vector(g).polynomial()
    handles = root_handles(mu)
    desc = recognize(g)
    out = {
        "graph6": _g6(g),
        "mu": format_poly(mu),
        "z": len(handles),
        "zero_multiplicity": mu.trailing_zeros(),
        "roots": [
            {"value": _render_root(h), "interval": [str(h.interval.lo), str(h.interval.hi)], "multiplicity": m}
            for h, m in handles
        ],
        "family": str(desc) if desc else None,
        "name": name_graph(g),
    }
    if args.format == "json":
        _emit(out)
        return EXIT_OK
    print(f"z: {out['z']}")
    print(f"zero multiplicity: {out['zero_multiplicity']}")
    print("roots: " + ", ".join(r["value"] + (f" (x{r['multiplicity']})" if r["multiplicity"] > 1 else "")
                                 for r in out["roots"]))
    for r in out["roots"]:
        lo, hi = r["interval"]
        where = lo if lo == hi else f"({lo}, {hi})"
        print(f"  {r['value']}: {where}, multiplicity {r['multiplicity']}")
    print(f"family: {out['family'] or 'none'}")
    return EXIT_OK


# -- enumerate --------------------------------------------------------------------------

def _enum_part(spec: EnumSpec) -> list[str]:
    return [_g6(g) for g in enumerate_graphs(spec)]


def cmd_enumerate(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= MAX_ENUM_ORDER:
        raise UsageError(f"order {args.n} is outside 1..{MAX_ENUM_ORDER}")
    try:
        specs = [
            EnumSpec(args.n, args.connected, args.edges, partition=(i, args.threads))
            for i in range(args.threads)
        ]
    except EnumError as exc:
        raise UsageError(str(exc)) from None
    if args.threads > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            lines = [s for part in pool.map(_enum_part, specs) for s in part]
    else:
        lines = _enum_part(specs[0])
    if args.count:
        print(len(lines))
        return EXIT_OK
    # sorted so the output does not depend on how the work was split
    lines.sort()
    sys.stdout.write("".join(s + "\n" for s in lines))
    return EXIT_OK


# -- verify ------------------------------------------------------------------------------

SELECTORS = ("appendix", "closed-forms", "tables", "classification", "properties", "exceptions:<id>",
             "comatching:<graph>", "all")


def _run_selector(selector: str, args: argparse.Namespace) -> list[v.VerificationReport]:
    cap = args.cap
    if selector == "appendix":
        return v.verify_appendix()
    if selector == "closed-forms":
        return v.verify_closed_forms(args.bound)
    if selector == "tables":
        return v.verify_tables()
    if selector == "classification":
        return v.verify_classification(cap or v.DEFAULT_CAP, args.threads)
    if selector == "properties":
        return v.verify_root_properties(cap or 8)
    if selector.startswith("exceptions:"):
        theorem = selector.split(":", 1)[1]
        if theorem not in THEOREMS:
            raise UsageError(f"unknown theorem id {theorem!r}; choose from {', '.join(THEOREMS)}")
        return v.verify_theorem_exceptions(theorem, cap or v.DEFAULT_CAP, args.threads)
    if selector.startswith("comatching:"):
        text = selector.split(":", 1)[1]
        g = _graph(text)
        if g.n > (cap or v.DEFAULT_CAP):
            raise UsageError(f"graph order {g.n} exceeds the cap {cap or v.DEFAULT_CAP}")
        return v.verify_comatching(text, cap or v.DEFAULT_CAP, args.threads)
    if selector == "all":
        out: list[v.VerificationReport] = []
        for part in ("appendix", "closed-forms", "tables", *(f"exceptions:{t}" for t in THEOREMS),
                     "classification", "properties"):
            out += _run_selector(part, args)
        return out
    raise UsageError(f"unknown selector {selector!r}; choose from {', '.join(SELECTORS)}")


def cmd_verify(args: argparse.Namespace) -> int:
    if args.cap is not None and not 1 <= args.cap <= MAX_ENUM_ORDER:
        raise UsageError(f"--cap must be in 1..{MAX_ENUM_ORDER}")
    if args.cap == MAX_ENUM_ORDER:
        print(f"warning: cap {MAX_ENUM_ORDER} searches order-{MAX_ENUM_ORDER} graphs and can take a long time",
              file=sys.stderr)
    reports = _run_selector(args.selector, args)
    timing = not args.no_timing
    lines = [r.to_json(timing) for r in reports]
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write("".join(line + "\n" for line in lines))
    if args.format == "json":
        sys.stdout.write("".join(line + "\n" for line in lines))
    else:
        for r in reports:
            print(f"{r.status:<18} {r.claim}")
            for note in r.notes:
                print(f"{'':<18}   {note}")
            for w in r.witnesses if r.status == v.COUNTEREXAMPLE else ():
                print(f"{'':<18}   witness {w.graph6} {w.name} μ = {w.mu}")
        bad = sum(not r.ok for r in reports)
        print(f"{len(reports)} claims, {bad} counterexample(s)")
    return EXIT_COUNTEREXAMPLE if any(not r.ok for r in reports) else EXIT_OK


# -- iso ----------------------------------------------------------------------------------

def cmd_iso(args: argparse.Namespace) -> int:
    a, b = _graph(args.first), _graph(args.second)
    same = is_isomorphic(a, b)
    if args.format == "json":
        _emit({"first": _g6(a), "second": _g6(b), "isomorphic": same})
    else:
        print("isomorphic: " + ("true" if same else "false"))
    return EXIT_OK


# -- entry point ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matchroots", description="Exact matching polynomials of graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("mu", help="matching polynomial, matching vector and maximum matching")
    p.add_argument("graph", help="graph6 string or graph expression, e.g. 'F(2)' or '5.18 ∪ K_1'")
    p.add_argument("--charpoly", action="store_true", help="also print the characteristic polynomial")
    fmt(p)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("classify", help="distinct matching roots and family recognition")
    p.add_argument("graph")
    fmt(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="one graph6 line per isomorphism class")
    p.add_argument("-n", type=int, required=True, help=f"order, at most {MAX_ENUM_ORDER}")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--edges", type=int, default=None)
    p.add_argument("--count", action="store_true", help="print only the number of classes")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check a claim and write a JSON-lines report")
    p.add_argument("selector", help="one of: " + ", ".join(SELECTORS))
    p.add_argument("--cap", type=int, default=None,
                   help="order cap for sweeps and searches (default 9; 8 for properties)")
    p.add_argument("--bound", type=int, default=6, help="parameter bound for closed-forms")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--report", help="write the JSON-lines report to this file")
    p.add_argument("--no-timing", action="store_true", help="write elapsed_ms as 0 for byte-stable reports")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("iso", help="isomorphism test of two graphs")
    p.add_argument("first")
    p.add_argument("second")
    fmt(p)
    p.set_defaults(func=cmd_iso)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
