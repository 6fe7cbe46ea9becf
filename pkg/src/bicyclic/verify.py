"""Exhaustive verification sweeps.

Every suite returns a :class:`SuiteResult`; the CLI ``verify`` command and
the acceptance tests both run these.  Defaults match the acceptance bounds.
"""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import witnesses as W
from .classifier import (
    BelowA,
    DHalf,
    DPair,
    FHalf,
    FPair,
    NoWitnessFound,
    OddAll,
    ZeroRow,
    classify,
    maximality_probe,
    star_set,
)
from .core import Element, adjoint, apply_shift, multiply, parity, Parity
from .figures import FIGURES
from .partitions import (
    DPartition,
    DZeroPartition,
    EPartition,
    ParitySplit,
    ZeroPartition,
    partition_avoids,
    render_grid,
    star_partition,
)
from .window import (
    FiniteTarget,
    OddCycle,
    TwoColoring,
    Undecided,
    Window,
    associated_graph,
    bipartition_or_odd_cycle,
    k_colorable,
    verify_certificate,
    window_elements,
)

log = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, item) -> None:
        if len(self.failures) < 50:
            self.failures.append(item)
        else:
            self.failures[-1] = item

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.checked} checks, {len(self.failures)} failures ({self.seconds:.1f}s)"
        for note in self.notes:
            text += f"\n    {note}"
        for item in self.failures[:5]:
            text += f"\n    failure: {item}"
        return text


def _timed(fn: Callable[..., SuiteResult]) -> Callable[..., SuiteResult]:
    def run(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        log.info(res.line())
        return res

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


# -- algebra -----------------------------------------------------------------------


@_timed
def axioms(assoc_n: int = 10, pair_n: int = 20) -> SuiteResult:
    """Associativity on all triples of window ``assoc_n``; unit, inverse and adjoint laws on pairs of ``pair_n``."""
    res = SuiteResult("axioms")
    small = window_elements(assoc_n)
    mid = window_elements(2 * assoc_n)
    # products of small elements lie in window 2n, so two tables cover every bracket
    left = {(u, z): multiply(u, z) for u in mid for z in small}
    right = {(x, u): multiply(x, u) for x in small for u in mid}
    inner = {(x, y): multiply(x, y) for x in small for y in small}
    for x in small:
        for y in small:
            xy = inner[x, y]
            for z in small:
                res.checked += 1
                if left[xy, z] != right[x, inner[y, z]]:
                    res.fail(("assoc", x, y, z))
    one = Element(0, 0)
    elems = window_elements(pair_n)
    for x in elems:
        xs = adjoint(x)
        res.checked += 4
        if multiply(one, x) != x or multiply(x, one) != x:
            res.fail(("identity", x))
        if multiply(multiply(x, xs), x) != x:
            res.fail(("x x* x", x))
        if multiply(multiply(xs, x), xs) != xs:
            res.fail(("x* x x*", x))
        if adjoint(xs) != x:
            res.fail(("involution", x))
    for x in elems:
        xs = adjoint(x)
        for y in elems:
            res.checked += 2
            p = multiply(x, y)
            if adjoint(p) != multiply(adjoint(y), xs):
                res.fail(("anti-hom", x, y))
            if p[0] < 0 or p[0] + p[1] < 0:
                res.fail(("closure", x, y))
    return res


@_timed
def representation(n: int = 20, points: int = 60) -> SuiteResult:
    """``multiply`` agrees with composition of partial shifts, domains included."""
    res = SuiteResult("representation")
    elems = window_elements(n)
    for x in elems:
        for y in elems:
            xy = multiply(x, y)
            for k in range(points + 1):
                res.checked += 1
                inner = apply_shift(y, k)
                composed = None if inner is None else apply_shift(x, inner)
                if apply_shift(xy, k) != composed:
                    res.fail((x, y, k))
    return res


@_timed
def parity_law(n: int = 20) -> SuiteResult:
    res = SuiteResult("parity")
    elems = window_elements(n)
    for x in elems:
        for y in elems:
            res.checked += 1
            if (parity(multiply(x, y)) is Parity.ODD) != (parity(x) != parity(y)):
                res.fail((x, y))
    return res


# -- witnesses ------------------------------------------------------------------------


def witness_parameter_tuples(bound: int = 20) -> Iterator[tuple[str, tuple]]:
    """Every candidate parameter tuple with all coordinates in ``[-bound, bound]``.

    Tuples for ``a0lem`` and ``00prop1`` are pre-filtered to elements of B.
    """
    R = range(-bound, bound + 1)
    P = range(0, bound + 1)
    for args in itertools.product(R, R):
        yield "evenprop", args
    for args in itertools.product(R, R, R):
        yield "amalemma2", args
    for args in itertools.product(R, R):
        yield "amalemma4", args
    for args in itertools.product(R, R, R):
        yield "amaprop5", args
    for args in itertools.product(R, R):
        yield "amaprop6", args
    for args in itertools.product(R, R, R):
        yield "a0blemma", args
    for a in range(1, bound + 1):
        for c in range(0, a):
            for d in range(-c, a - c):
                for e in range(0, a):
                    for f in range(-e, a - e):
                        yield "a0lem", (a, c, d, e, f)
    for c in P:
        for d in range(-c, bound + 1):
            for e in P:
                for f in range(-e, bound + 1):
                    yield "00prop1", (c, d, e, f)


@_timed
def witness_sweep(bound: int = 20) -> SuiteResult:
    """Every constructor on every admissible tuple yields a validating odd cycle."""
    res = SuiteResult("witnesses")
    per: dict[str, int] = {}
    walks: dict[str, int] = {}
    for name, args in witness_parameter_tuples(bound):
        try:
            w = W.CONSTRUCTORS[name](*args)
        except W.PreconditionError:
            continue
        res.checked += 1
        per[name] = per.get(name, 0) + 1
        if not W.validate(w):
            res.fail((name, args))
        if any(x[0] < 0 or x[0] + x[1] < 0 for x in w.cycle):
            res.fail((name, args, "vertex outside B"))
        if len(w.cycle) == 3 and not w.simple:
            res.fail((name, args, "degenerate triangle"))
        if not w.simple:
            walks[name] = walks.get(name, 0) + 1
        m = 3 * max(abs(v) for v in args) if args else 0
        if any(x not in Window(max(m, 1)) for x in w.cycle):
            res.fail((name, args, "outside window 3*max"))
    res.notes.append("tuples per constructor: " + ", ".join(f"{k}={v}" for k, v in per.items()))
    if walks:
        res.notes.append(
            "closed walks revisiting a vertex (still odd): " + ", ".join(f"{k}={v}" for k, v in walks.items())
        )
    return res


# -- partitions ----------------------------------------------------------------------


def partition_cases(d_max: int = 30, e_max: int = 15, z_max: int = 9, extended: bool = True):
    """``(rule, target, window)`` triples covering every parameter family."""
    for a in range(2, d_max + 1, 2):
        for c in range(1, a // 2, 2):
            if 2 * c < a:
                yield DPartition(a, c), FiniteTarget([Element(a, -a), Element(c, -c)]), 60
        if (a // 2) % 2:
            h = a // 2
            yield DPartition(a, h), FiniteTarget([Element(a, -a), Element(h, -h), Element(0, 0)]), 60
    for a in range(1, e_max + 1):
        for d in range(-a + 1, a):
            if d % 2:
                yield EPartition(a, d), FiniteTarget(BelowA(a, d).finite_elements()), 45
    for d in range(-z_max, z_max + 1, 2):
        yield ZeroPartition(d), ZeroRow(d), 60
    yield ParitySplit(), OddAll(), 60
    if extended:
        for a in range(4, d_max + 1, 4):
            yield DZeroPartition(a), FiniteTarget([Element(a, -a), Element(0, 0)]), 60


@_timed
def partition_sweep(d_max: int = 30, e_max: int = 15, z_max: int = 9, star: bool = True) -> SuiteResult:
    """Each closed-form rule avoids its target; optionally also the adjoint transport."""
    res = SuiteResult("partitions")
    for rule, target, n in partition_cases(d_max, e_max, z_max):
        res.checked += 1
        v = partition_avoids(rule, target, n)
        if v is not True:
            res.fail((rule.descriptor(), str(v)))
        if star:
            res.checked += 1
            v = partition_avoids(star_partition(rule), star_set(target), n)
            if v is not True:
                res.fail(("star", rule.descriptor(), str(v)))
    return res


@_timed
def figure_sweep() -> SuiteResult:
    res = SuiteResult("figures")
    for name, fig in FIGURES.items():
        res.checked += 1
        got = render_grid(fig["rule"], fig["rows"], fig["cols"])
        if got != fig["grid"]:
            res.fail(name)
    return res


# -- theorem --------------------------------------------------------------------------


def small_sets(n: int = 8, max_size: int = 2) -> Iterator[tuple[Element, ...]]:
    elems = window_elements(n)
    for k in range(0, max_size + 1):
        yield from itertools.combinations(elems, k)


@_timed
def theorem_sweep(n: int = 8, max_size: int = 2, check_n: int = 24, strict: bool = False) -> SuiteResult:
    """Every verdict on small sets is corroborated by breadth-first search and its certificate."""
    res = SuiteResult("theorem" + (" (strict)" if strict else ""))
    w = Window(check_n)
    kinds = {"avoidable": 0, "unavoidable": 0}
    for U in small_sets(n, max_size):
        res.checked += 1
        try:
            v = classify(U, strict=strict)
        except NoWitnessFound as exc:
            res.fail((U, "no verdict", str(exc)))
            continue
        kinds[v.kind] += 1
        g = associated_graph(w, v.target)
        cert = bipartition_or_odd_cycle(g)
        if v.avoidable:
            if not isinstance(cert, TwoColoring):
                res.fail((U, "avoidable but odd cycle", cert))
            elif partition_avoids(v.rule, v.target, w) is not True:
                res.fail((U, "rule fails", v.rule.descriptor()))
        else:
            if not isinstance(cert, OddCycle) or not verify_certificate(g, cert):
                res.fail((U, "unavoidable but bipartite"))
            if not W.validate(W.Witness(v.witness.cycle, v.target, v.witness.provenance)):
                res.fail((U, "witness invalid"))
    res.notes.append(f"{kinds['avoidable']} avoidable, {kinds['unavoidable']} unavoidable")
    return res


@_timed
def duality_sweep(n: int = 8, max_size: int = 2, check_n: int = 24) -> SuiteResult:
    res = SuiteResult("duality")
    for U in small_sets(n, max_size):
        res.checked += 1
        v = classify(U)
        vs = classify(star_set(v.target))
        if v.kind != vs.kind:
            res.fail((U, v.kind, vs.kind))
        if v.avoidable:
            res.checked += 1
            rule = star_partition(v.rule)
            if partition_avoids(rule, star_set(v.target), check_n) is not True:
                res.fail((U, "star transport", rule.descriptor()))
    return res


PROBE_FAMILIES = {
    "d:a=8,c=3": DPair(8, 3),
    "e:a=6": DHalf(6),
    "a": OddAll(),
    "b:d=5": ZeroRow(5),
    "b:d=-5": ZeroRow(-5),
    "c:a=6,d=5": BelowA(6, 5),
    "f:b=8,d=3": FPair(8, 3),
    "g:b=6": FHalf(6),
}


@_timed
def probe_sweep(n: int = 12, families=None) -> SuiteResult:
    res = SuiteResult("probes")
    for name, fam in (families or PROBE_FAMILIES).items():
        rep = maximality_probe(fam, n)
        res.checked += len(rep.obstructions) + len(rep.unobstructed)
        res.notes.append(rep.summary())
        for x in rep.unobstructed:
            res.fail((name, str(x)))
    return res


@_timed
def kcolor_sweep(budget: int = 1_000_000) -> SuiteResult:
    res = SuiteResult("kcolor")
    g = associated_graph(6, [Element(2, -2), Element(4, -4)])
    res.checked += 2
    try:
        if k_colorable(g, 2, budget) is not None:
            res.fail("k=2 found a colouring")
        col = k_colorable(g, 3, budget)
        if col is None or any(col[u] == col[v] for u, v in g.edges()):
            res.fail("k=3 failed")
    except Undecided as exc:
        res.fail(f"budget exhausted: {exc}")
    return res


SUITES = {
    "axioms": axioms,
    "representation": representation,
    "parity": parity_law,
    "witnesses": witness_sweep,
    "partitions": partition_sweep,
    "figures": figure_sweep,
    "theorem": theorem_sweep,
    "duality": duality_sweep,
    "probes": probe_sweep,
    "kcolor": kcolor_sweep,
}
