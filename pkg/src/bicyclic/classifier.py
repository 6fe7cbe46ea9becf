"""Decision procedure for avoidability of finite subsets of B.

A finite set is avoidable exactly when it lies inside a maximal avoidable
set: avoidability of ``U`` is bipartiteness of its associated graph, an odd
cycle uses only finitely many target elements, and avoidable sets are closed
under unions of chains.  The maximal sets are the parameterised families
below.  Families ``h`` and ``i`` (``{(a,-a),(0,0)}`` and ``{(0,b),(0,0)}``
with ``a, b`` divisible by 4) are missing from the classical classification
list; they are avoidable via :class:`~bicyclic.partitions.DZeroPartition`
and maximal, and ``strict=True`` drops them.
"""

from __future__ import annotations

import itertools
import json
import logging
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence, Union

from .core import Element, EvenClass, adjoint, classify_even, format_elements
from .partitions import (
    DPartition,
    DZeroPartition,
    EPartition,
    ParitySplit,
    PartitionRule,
    ZeroPartition,
    star_partition,
)
from .window import (
    FiniteTarget,
    OddCycle,
    Window,
    as_target,
    associated_graph,
    bipartition_or_odd_cycle,
    restrict,
    window_elements,
    window_key,
)
from . import witnesses as W

log = logging.getLogger(__name__)


# -- families ----------------------------------------------------------------


class MaximalFamily:
    kind: str = "?"

    def __contains__(self, x: object) -> bool:
        raise NotImplementedError

    def params(self) -> dict[str, int]:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}  # type: ignore[attr-defined]

    def descriptor(self) -> str:
        p = self.params()
        if not p:
            return self.kind
        return self.kind + ":" + ",".join(f"{k}={v}" for k, v in p.items())

    def __str__(self) -> str:
        return self.descriptor()

    def finite_elements(self) -> Optional[list[Element]]:
        """The members when the family is finite, else ``None``."""
        return None


def _odd(n: int) -> bool:
    return n % 2 == 1


@dataclass(frozen=True)
class OddAll(MaximalFamily):
    kind = "a"

    def __contains__(self, x):
        return _odd(x[1])


@dataclass(frozen=True)
class ZeroRow(MaximalFamily):
    d: int
    kind = "b"

    def __post_init__(self):
        if not _odd(self.d):
            raise ValueError(f"family b needs odd d, got {self.d}")

    def __contains__(self, x):
        return tuple(x) == (0, 0) or x[1] == self.d


@dataclass(frozen=True)
class BelowA(MaximalFamily):
    a: int
    d: int
    kind = "c"

    def __post_init__(self):
        if self.a < 1 or not _odd(self.d) or self.d >= self.a:
            raise ValueError(f"family c needs a >= 1 and odd d < a, got a={self.a}, d={self.d}")

    def __contains__(self, x):
        c, d = x
        if (c, d) in ((self.a, 0), (0, 0)):
            return True
        return d == self.d and max(c, c + d) < self.a

    def finite_elements(self):
        out = [Element(0, 0), Element(self.a, 0)]
        out += [Element(c, self.d) for c in range(max(0, -self.d), self.a) if c + self.d < self.a]
        return sorted(set(out), key=window_key)


@dataclass(frozen=True)
class DPair(MaximalFamily):
    a: int
    c: int
    kind = "d"

    def __post_init__(self):
        if self.a < 2 or self.a % 2 or not _odd(self.c) or not 0 < 2 * self.c < self.a:
            raise ValueError(f"family d needs even a, odd c, 0 < c < a/2, got a={self.a}, c={self.c}")

    def finite_elements(self):
        return [Element(self.c, -self.c), Element(self.a, -self.a)]

    def __contains__(self, x):
        return tuple(x) in ((self.a, -self.a), (self.c, -self.c))


@dataclass(frozen=True)
class DHalf(MaximalFamily):
    a: int
    kind = "e"

    def __post_init__(self):
        if self.a < 2 or self.a % 2 or not _odd(self.a // 2):
            raise ValueError(f"family e needs even a with a/2 odd, got a={self.a}")

    def finite_elements(self):
        h = self.a // 2
        return [Element(0, 0), Element(h, -h), Element(self.a, -self.a)]

    def __contains__(self, x):
        return tuple(x) in set(map(tuple, self.finite_elements()))


@dataclass(frozen=True)
class FPair(MaximalFamily):
    b: int
    d: int
    kind = "f"

    def __post_init__(self):
        if self.b < 2 or self.b % 2 or not _odd(self.d) or not 0 < 2 * self.d < self.b:
            raise ValueError(f"family f needs even b, odd d, 0 < d < b/2, got b={self.b}, d={self.d}")

    def finite_elements(self):
        return [Element(0, self.d), Element(0, self.b)]

    def __contains__(self, x):
        return tuple(x) in ((0, self.b), (0, self.d))


@dataclass(frozen=True)
class FHalf(MaximalFamily):
    b: int
    kind = "g"

    def __post_init__(self):
        if self.b < 2 or self.b % 2 or not _odd(self.b // 2):
            raise ValueError(f"family g needs even b with b/2 odd, got b={self.b}")

    def finite_elements(self):
        return [Element(0, 0), Element(0, self.b // 2), Element(0, self.b)]

    def __contains__(self, x):
        return tuple(x) in ((0, 0), (0, self.b // 2), (0, self.b))


@dataclass(frozen=True)
class DZero(MaximalFamily):
    a: int
    kind = "h"

    def __post_init__(self):
        if self.a < 4 or self.a % 4:
            raise ValueError(f"family h needs a divisible by 4, got a={self.a}")

    def finite_elements(self):
        return [Element(0, 0), Element(self.a, -self.a)]

    def __contains__(self, x):
        return tuple(x) in ((0, 0), (self.a, -self.a))


@dataclass(frozen=True)
class FZero(MaximalFamily):
    b: int
    kind = "i"

    def __post_init__(self):
        if self.b < 4 or self.b % 4:
            raise ValueError(f"family i needs b divisible by 4, got b={self.b}")

    def finite_elements(self):
        return [Element(0, 0), Element(0, self.b)]

    def __contains__(self, x):
        return tuple(x) in ((0, 0), (0, self.b))


FAMILY_KINDS = {
    "a": OddAll, "b": ZeroRow, "c": BelowA, "d": DPair, "e": DHalf,
    "f": FPair, "g": FHalf, "h": DZero, "i": FZero,
}
THEOREM_KINDS = "abcdefg"


def parse_family(text: str) -> MaximalFamily:
    """Parse descriptors such as ``a``, ``b:d=5``, ``c:a=6,d=5``, ``d:a=8,c=3``."""
    kind, _, rest = text.strip().partition(":")
    cls = FAMILY_KINDS.get(kind)
    if cls is None:
        raise ValueError(f"unknown family {kind!r}; expected one of {''.join(FAMILY_KINDS)}")
    params = {}
    for item in filter(None, (p.strip() for p in rest.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"malformed parameter {item!r}")
        params[key.strip()] = int(value)
    try:
        return cls(**params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for family {kind}: {exc}") from None


def family_partition(fam: MaximalFamily) -> PartitionRule:
    if isinstance(fam, OddAll):
        return ParitySplit()
    if isinstance(fam, ZeroRow):
        return ZeroPartition(fam.d)
    if isinstance(fam, BelowA):
        return EPartition(fam.a, fam.d)
    if isinstance(fam, DPair):
        return DPartition(fam.a, fam.c)
    if isinstance(fam, DHalf):
        return DPartition(fam.a, fam.a // 2)
    if isinstance(fam, DZero):
        return DZeroPartition(fam.a)
    if isinstance(fam, (FPair, FHalf, FZero)):
        return star_partition(family_partition(star_set(fam)))
    raise TypeError(f"not a family: {fam!r}")


# -- adjoint transport ---------------------------------------------------------


@dataclass(frozen=True)
class StarredTarget:
    """``{x : x* in inner}`` for targets without a closed-form adjoint."""

    inner: object

    def __contains__(self, x):
        return adjoint(Element(*x)) in self.inner

    def __str__(self):
        return f"star({self.inner})"


def star_set(U):
    """Elementwise adjoint of a finite set; families map to families."""
    if isinstance(U, StarredTarget):
        return U.inner
    if isinstance(U, OddAll):
        return U
    if isinstance(U, ZeroRow):
        return ZeroRow(-U.d)
    if isinstance(U, BelowA):
        # for d <= -a the family is {(a,0),(0,0)} whatever d is
        return BelowA(U.a, -U.d) if -U.d < U.a else U
    pairs = {DPair: FPair, DHalf: FHalf, DZero: FZero}
    for left, right in pairs.items():
        if isinstance(U, left):
            return right(*U.params().values())
        if isinstance(U, right):
            return left(*U.params().values())
    if isinstance(U, MaximalFamily):
        return StarredTarget(U)
    elements = getattr(U, "elements", None)
    if elements is None and not isinstance(U, (set, frozenset, list, tuple)):
        return StarredTarget(U)
    return FiniteTarget(adjoint(Element(*x)) for x in (elements if elements is not None else U))


# -- containment ----------------------------------------------------------------


@dataclass(frozen=True)
class Containment:
    """A family containing the query set.

    ``family`` is a concrete member of the schema (minimal free parameters);
    ``schema`` names the whole admissible range, e.g. ``c:a>=7,d=1``.
    """

    family: MaximalFamily
    schema: str
    pinned: bool

    def __str__(self):
        return self.schema


def _pinned(fam: MaximalFamily) -> Containment:
    return Containment(fam, fam.descriptor(), True)


def _contain_b(nz):
    if not all(_odd(x[1]) for x in nz):
        return None
    ds = {x[1] for x in nz}
    if len(ds) > 1:
        return None
    if ds:
        return _pinned(ZeroRow(ds.pop()))
    return Containment(ZeroRow(1), "b:d=odd", False)


def _contain_c(nz):
    es = [x for x in nz if x[1] == 0]
    rest = [x for x in nz if x[1] != 0]
    if len(es) > 1 or not all(_odd(x[1]) for x in rest):
        return None
    ds = {x[1] for x in rest}
    if len(ds) > 1:
        return None
    need = max((max(c, c + d) + 1 for c, d in rest), default=1)
    if es:
        a = es[0][0]
        if need > a:
            return None
        if ds:
            return _pinned(BelowA(a, ds.pop()))
        return Containment(BelowA(a, 1 if a > 1 else -1), f"c:a={a},d=odd<{a}", False)
    a_min = max(1, need)
    if ds:
        d = ds.pop()
        return Containment(BelowA(a_min, d), f"c:a>={a_min},d={d}", False)
    return Containment(BelowA(1, -1), "c:a>=1,d=odd<a", False)


def _antidiagonal(U):
    """``{k : (k,-k) in U}`` or ``None`` if ``U`` has other elements."""
    if not all(x[0] + x[1] == 0 for x in U):
        return None
    return sorted(x[0] for x in U)


def _contain_d(U, letters=("d", "a", "c")):
    kind, pa, pc = letters
    ks = _antidiagonal(U)
    if ks is None or 0 in ks:
        return None
    evens = [k for k in ks if k % 2 == 0]
    odds = [k for k in ks if k % 2]
    if len(evens) > 1 or len(odds) > 1:
        return None
    cls = DPair if kind == "d" else FPair
    if evens and odds:
        a, c = evens[0], odds[0]
        return _pinned(cls(a, c)) if 2 * c < a else None
    if evens:
        a = evens[0]
        if a < 4:
            return None
        return Containment(cls(a, 1), f"{kind}:{pa}={a},{pc}=odd<{pa}/2", False)
    if odds:
        c = odds[0]
        return Containment(cls(2 * c + 2, c), f"{kind}:{pa}>={2 * c + 2} even,{pc}={c}", False)
    return Containment(cls(4, 1), f"{kind}:{pa}=even,{pc}=odd<{pa}/2", False)


def _contain_e(U, letters=("e", "a")):
    kind, pa = letters
    ks = _antidiagonal(U)
    if ks is None:
        return None
    cands = set()
    for k in ks:
        if k == 0:
            continue
        if k % 2 == 0 and _odd(k // 2):
            cands.add(k)
        elif _odd(k):
            cands.add(2 * k)
        else:
            return None
    cls = DHalf if kind == "e" else FHalf
    if len(cands) > 1:
        return None
    if cands:
        return _pinned(cls(cands.pop()))
    return Containment(cls(2), f"{kind}:{pa}=2 mod 4", False)


def _contain_h(U, letters=("h", "a")):
    kind, pa = letters
    ks = _antidiagonal(U)
    if ks is None:
        return None
    ks = [k for k in ks if k]
    cls = DZero if kind == "h" else FZero
    if len(ks) > 1 or (ks and ks[0] % 4):
        return None
    if ks:
        return _pinned(cls(ks[0]))
    return Containment(cls(4), f"{kind}:{pa}=0 mod 4", False)


def containing_families(U: Iterable, extended: bool = True) -> list[Containment]:
    """Every family (with inferred parameters) containing the finite set ``U``, in order a..g (h, i)."""
    U = sorted(set(Element(*x) for x in U), key=window_key)
    Us = [adjoint(x) for x in U]
    nz = [x for x in U if x != (0, 0)]
    found = []
    if all(_odd(x[1]) for x in U):
        found.append(_pinned(OddAll()))
    found.append(_contain_b(nz))
    found.append(_contain_c(nz))
    found.append(_contain_d(U))
    found.append(_contain_e(U))
    found.append(_contain_d(Us, ("f", "b", "d")))
    found.append(_contain_e(Us, ("g", "b")))
    if extended:
        found.append(_contain_h(U))
        found.append(_contain_h(Us, ("i", "b")))
    out = [c for c in found if c is not None]
    for c in out:
        assert all(x in c.family for x in U), (c, U)
    return out


# -- witnesses ---------------------------------------------------------------------


class NoWitnessFound(RuntimeError):
    """No certificate either way within the search budget; indicates a defect, not a verdict."""


def _direct_witnesses(U: Sequence[Element]):
    """Constructor witnesses in fixed precedence order (lazy)."""
    Uset = set(U)
    cls = {x: classify_even(x) for x in U}
    D = [x[0] for x in U if cls[x] is EvenClass.D]
    E = [x[0] for x in U if cls[x] is EvenClass.E]
    odd = [x for x in U if cls[x] is EvenClass.ODD]
    anti = [x[0] for x in U if x[0] + x[1] == 0]
    has_id = Element(0, 0) in Uset

    for x in U:
        if cls[x] is EvenClass.INTERIOR_EVEN:
            yield lambda x=x: W.w_evenprop(*x)
    for a in D:
        for c, d in U:
            if c + d >= 1:
                yield lambda a=a, c=c, d=d: W.w_amalemma2(a, c, d)
    for a in D:
        for c in anti:
            if c != a and 2 * c > a:
                yield lambda a=a, c=c: W.w_amalemma4(a, c)
    for a in D:
        small = [c for c in anti if _odd(c) and 2 * c <= a]
        for c, e in itertools.combinations(small, 2):
            yield lambda a=a, c=c, e=e: W.w_amaprop5(a, c, e)
    if has_id:
        for a in D:
            for c in anti:
                if 0 < 2 * c < a:
                    yield lambda a=a, c=c: W.w_amaprop6(a, c)
    for a in E:
        for c, d in U:
            if (c, d) != (a, 0) and max(c, c + d) >= a:
                yield lambda a=a, c=c, d=d: W.w_a0blemma(a, c, d)
    for a in E:
        low = [x for x in odd if max(x[0], x[0] + x[1]) < a]
        for p, q in itertools.combinations(low, 2):
            if p[1] != q[1]:
                yield lambda a=a, p=p, q=q: W.w_a0lem(a, p[0], p[1], q[0], q[1])
    if has_id:
        for p, q in itertools.combinations(odd, 2):
            if p[1] != q[1]:
                yield lambda p=p, q=q: W.w_00prop1(p[0], p[1], q[0], q[1])


def construct_witness(U: Iterable) -> Optional[W.Witness]:
    """First constructor witness for ``U``, trying ``U*`` and transporting back if needed."""
    elems = sorted(set(Element(*x) for x in U), key=window_key)
    for make in _direct_witnesses(elems):
        return make()
    starred = sorted((adjoint(x) for x in elems), key=window_key)
    for make in _direct_witnesses(starred):
        return make().star()
    return None


def search_witness(U: Iterable, cap: int = 48) -> Optional[W.Witness]:
    """Breadth-first odd-cycle search on windows of doubling size up to ``cap``."""
    target = as_target(list(U))
    elems = list(target)  # type: ignore[arg-type]
    n = max([2] + [max(x[0], x[0] + x[1]) for x in elems])
    while n <= cap:
        cert = bipartition_or_odd_cycle(associated_graph(Window(n), target))
        if isinstance(cert, OddCycle):
            return W.Witness(cert.cycle, target, f"search[n={n}]")
        if n == cap:
            break
        n = min(2 * n, cap)
    return None


# -- verdicts -------------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    target: FiniteTarget
    avoidable: bool
    families: tuple[Containment, ...] = ()
    rule: Optional[PartitionRule] = None
    witness: Optional[W.Witness] = None

    @property
    def kind(self) -> str:
        return "avoidable" if self.avoidable else "unavoidable"

    def to_dict(self) -> dict:
        out: dict = {"verdict": self.kind, "set": [str(x) for x in self.target]}
        if self.avoidable:
            out["families"] = [c.schema for c in self.families]
            out["certificate"] = {"kind": "partition", "rule": self.rule.descriptor()}  # type: ignore[union-attr]
        else:
            assert self.witness is not None
            out["certificate"] = {"kind": "witness", **W.witness_to_dict(self.witness)}
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"{self.kind.upper()} {{{format_elements(self.target)}}}"]
        if self.avoidable:
            lines.append("families: " + " ".join(c.schema for c in self.families))
            lines.append(f"certificate: partition {self.rule.descriptor()}")  # type: ignore[union-attr]
        else:
            assert self.witness is not None
            lines.append("certificate: " + W.witness_to_text(self.witness))
        return "\n".join(lines)


def classify(U: Iterable, strict: bool = False, search_cap: int = 48) -> Verdict:
    """Avoidable with a partition rule, or unavoidable with an odd-cycle witness.

    ``strict`` restricts containment to the seven classical families a-g.  A
    ``search_cap`` of 0 disables the fallback odd-cycle search.  Raises
    :class:`NoWitnessFound` when neither certificate is found.
    """
    elems = [Element(*x) for x in U]
    target = FiniteTarget(dict.fromkeys(elems))
    conts = containing_families(target, extended=not strict)
    if conts:
        return Verdict(target, True, tuple(conts), family_partition(conts[0].family))
    w = construct_witness(target)
    if w is None and search_cap > 0:
        log.info("no constructor applies to %s; searching windows up to %d", target, search_cap)
        w = search_witness(target, search_cap)
    if w is None:
        raise NoWitnessFound(f"no family contains {target} and no odd cycle was found (cap {search_cap})")
    return Verdict(target, False, witness=w)


# -- maximality ------------------------------------------------------------------------


@dataclass
class ProbeReport:
    family: MaximalFamily
    n: int
    obstructions: dict = field(default_factory=dict)
    unobstructed: list = field(default_factory=list)
    support: int = 2

    @property
    def all_obstructed(self) -> bool:
        return not self.unobstructed

    def summary(self) -> str:
        status = "all obstructed" if self.all_obstructed else f"{len(self.unobstructed)} unobstructed"
        total = len(self.obstructions) + len(self.unobstructed)
        return f"probe {self.family.descriptor()} n={self.n}: {total} outside elements, {status}"


def maximality_probe(fam: MaximalFamily, w: Union[Window, int], support: int = 2, strict: bool = False) -> ProbeReport:
    """For each window element ``x`` outside ``fam``, find a finite ``S`` inside ``fam`` with ``S + {x}`` unavoidable.

    Subsets ``S`` of the family's window part are tried by size (up to
    ``support``) in window order; only constructor witnesses are used, and
    each witness is validated against ``S + {x}``.
    """
    n = w.n if isinstance(w, Window) else int(w)
    inside = restrict(fam, n)
    report = ProbeReport(fam, n, support=support)
    for x in window_elements(n):
        if x in fam:
            continue
        found = None
        for size in range(support + 1):
            for S in itertools.combinations(inside, size):
                U = list(S) + [x]
                try:
                    verdict = classify(U, strict=strict, search_cap=0)
                except NoWitnessFound:
                    continue
                if verdict.avoidable:
                    continue
                wit = replace(verdict.witness, target=verdict.target)  # type: ignore[arg-type]
                if W.validate(wit):
                    found = (tuple(S), verdict.witness.provenance)  # type: ignore[union-attr]
                    break
            if found:
                break
        if found:
            report.obstructions[x] = found
        else:
            report.unobstructed.append(x)
    log.info(report.summary())
    return report
