"""Command-line front end.

Exit status: 0 success or verified, 1 refuted or violation, 2 usage error,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from .classifier import NoWitnessFound, classify, maximality_probe, parse_family
from .core import adjoint, evaluate_word, format_elements, multiply, parse_element, parse_elements
from .partitions import partition_avoids, parse_rule, render_grid
from .verify import SUITES
from .window import (
    FiniteTarget,
    TwoColoring,
    Undecided,
    Window,
    associated_graph,
    bipartition_or_odd_cycle,
    certificate_from_json,
    certificate_to_json,
    k_colorable,
    to_dot,
    verify_certificate,
)

OK, REFUTED, USAGE, BUDGET = 0, 1, 2, 3

# --max for each suite: the bound it scales
MAX_PARAM = {
    "axioms": "assoc_n",
    "representation": "n",
    "parity": "n",
    "witnesses": "bound",
    "partitions": "d_max",
    "theorem": "n",
    "duality": "n",
    "probes": "n",
}


class UsageError(Exception):
    pass


def _range(text: str) -> range:
    m = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected a range lo..hi, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    return range(lo, hi + 1)


def _target(args) -> object:
    if getattr(args, "family", None):
        return parse_family(args.family)
    if args.set is None:
        raise UsageError("one of --set or --family is required")
    return FiniteTarget(dict.fromkeys(parse_elements(args.set)))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bicyclic", description="Avoidable sets in the bicyclic inverse semigroup.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("mul", help="multiply two elements")
    s.add_argument("x")
    s.add_argument("y")

    s = sub.add_parser("star", help="adjoint of an element")
    s.add_argument("x")

    s = sub.add_parser("word", help="evaluate a word over G=(0,1) and G*")
    s.add_argument("word")

    s = sub.add_parser("classify", help="decide avoidability of a finite set")
    s.add_argument("--set", required=True)
    s.add_argument("--json", action="store_true")
    s.add_argument("--strict", action="store_true", help="only the seven classical families a-g")
    s.add_argument("--search-cap", type=int, default=48)

    s = sub.add_parser("partition", help="check that a rule avoids a target on a window")
    s.add_argument("--rule", required=True)
    s.add_argument("--set")
    s.add_argument("--family")
    s.add_argument("--window", type=int, required=True)

    s = sub.add_parser("grid", help="render a partition rule as a 0/1 grid")
    s.add_argument("--rule", required=True)
    s.add_argument("--rows", type=_range, required=True)
    s.add_argument("--cols", type=_range, required=True)

    s = sub.add_parser("graph", help="associated graph on a window")
    s.add_argument("--set")
    s.add_argument("--family")
    s.add_argument("--window", type=int, required=True)
    s.add_argument("--dot", type=Path)
    s.add_argument("--color", action="store_true", help="colour vertices when bipartite")
    s.add_argument("--certificate", type=Path, help="write the bipartition or odd cycle here")

    s = sub.add_parser("check", help="verify a certificate file against a target on a window")
    s.add_argument("--certificate", type=Path, required=True)
    s.add_argument("--set")
    s.add_argument("--family")
    s.add_argument("--window", type=int, required=True)

    s = sub.add_parser("verify", help="run a verification sweep")
    s.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    s.add_argument("--max", type=int, help="main bound of the suite (see README)")

    s = sub.add_parser("ncolor", help="k-colouring search on the associated graph")
    s.add_argument("--set")
    s.add_argument("--family")
    s.add_argument("--window", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--budget", type=int, default=1_000_000)

    s = sub.add_parser("probe", help="maximality probe for a family")
    s.add_argument("--family", required=True)
    s.add_argument("--window", type=int, required=True)
    s.add_argument("--support", type=int, default=2)
    return p


_VALUE_OPTS = {"--rows", "--cols", "--set"}


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    """Allow ``--cols -7..13`` (argparse would read ``-7..13`` as an option)."""
    out: list[str] = []
    i = 0
    argv = list(argv)
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return _dispatch(args, out)
    except (ValueError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def _emit(out, text: str) -> None:
    out.write(text.rstrip("\n") + "\n")


def _dispatch(args, out) -> int:
    cmd = args.command
    if cmd == "mul":
        _emit(out, str(multiply(parse_element(args.x), parse_element(args.y))))
        return OK
    if cmd == "star":
        _emit(out, str(adjoint(parse_element(args.x))))
        return OK
    if cmd == "word":
        _emit(out, str(evaluate_word(args.word)))
        return OK
    if cmd == "classify":
        try:
            v = classify(parse_elements(args.set), strict=args.strict, search_cap=args.search_cap)
        except NoWitnessFound as exc:
            print(f"error: {exc}", file=sys.stderr)
            return BUDGET
        _emit(out, v.to_json() if args.json else v.to_text())
        return OK if v.avoidable else REFUTED
    if cmd == "partition":
        rule = parse_rule(args.rule)
        res = partition_avoids(rule, _target(args), args.window)
        if res is True:
            _emit(out, f"{rule.descriptor()} avoids the target on window {args.window}")
            return OK
        _emit(out, f"{rule.descriptor()} violated: {res}")
        return REFUTED
    if cmd == "grid":
        _emit(out, render_grid(parse_rule(args.rule), args.rows, args.cols))
        return OK
    if cmd == "graph":
        g = associated_graph(Window(args.window), _target(args))
        cert = bipartition_or_odd_cycle(g)
        bipartite = isinstance(cert, TwoColoring)
        if args.dot:
            args.dot.write_text(to_dot(g, cert if (args.color and bipartite) else None))
        if args.certificate:
            args.certificate.write_text(certificate_to_json(cert) + "\n")
        _emit(out, f"vertices {len(g.vertices)} edges {g.edge_count()}")
        if bipartite:
            _emit(out, "bipartite")
        else:
            _emit(out, "odd cycle " + format_elements(cert.cycle))  # type: ignore[union-attr]
        return OK
    if cmd == "check":
        cert = certificate_from_json(args.certificate.read_text())
        g = associated_graph(Window(args.window), _target(args))
        ok = verify_certificate(g, cert)
        _emit(out, f"{cert.kind} {'valid' if ok else 'INVALID'}")
        return OK if ok else REFUTED
    if cmd == "verify":
        names = list(SUITES) if args.suite == "all" else [args.suite]
        status = OK
        for name in names:
            kwargs = {}
            if args.max is not None and name in MAX_PARAM:
                kwargs[MAX_PARAM[name]] = args.max
            res = SUITES[name](**kwargs)
            _emit(out, res.line())
            if not res.passed:
                status = REFUTED
        return status
    if cmd == "ncolor":
        g = associated_graph(Window(args.window), _target(args))
        try:
            col = k_colorable(g, args.k, args.budget)
        except Undecided as exc:
            _emit(out, f"undecided: {exc}")
            return BUDGET
        if col is None:
            _emit(out, f"no proper {args.k}-colouring")
            return REFUTED
        sizes = [sum(1 for c in col.values() if c == i) for i in range(args.k)]
        _emit(out, f"proper {args.k}-colouring found; class sizes {sizes}")
        return OK
    if cmd == "probe":
        rep = maximality_probe(parse_family(args.family), args.window, support=args.support)
        _emit(out, rep.summary())
        for x, (S, prov) in rep.obstructions.items():
            _emit(out, f"  {x}: S={{{format_elements(S)}}} via {prov}")
        for x in rep.unobstructed:
            _emit(out, f"  {x}: no obstruction found")
        return OK if rep.all_obstructed else REFUTED
    raise UsageError(f"unknown command {cmd}")


def main() -> None:
    sys.exit(run())
