"""Closed-form two-class partitions of B and the avoidance checker.

A rule maps every element of B to class ``"A"`` or ``"B"``.  Grids render
``0`` for A, ``1`` for B and ``.`` for pairs outside B, rows indexed by the
first coordinate and columns by the second.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

import numpy as np

from .core import Element, adjoint, multiply
from .window import (
    Window,
    _window_elements,
    as_target,
    product_codes,
    target_mask,
)


def remainder(y: int, m: int) -> int:
    """``y`` mod ``m`` in ``[0, m-1]`` for either sign of ``y``."""
    if m <= 0:
        raise ValueError("modulus must be positive")
    return y % m


class PartitionRule:
    """Base class; subclasses implement :meth:`color` and :meth:`descriptor`."""

    def color(self, x: Element) -> str:
        raise NotImplementedError

    def descriptor(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.descriptor()


@dataclass(frozen=True)
class ParitySplit(PartitionRule):
    """Even elements in A, odd elements in B."""

    def color(self, x: Element) -> str:
        return "B" if x[1] % 2 else "A"

    def descriptor(self) -> str:
        return "parity"


@dataclass(frozen=True)
class DPartition(PartitionRule):
    """Avoids ``{(a,-a), (c,-c)}`` for odd ``c < a/2`` and ``{(a,-a), (a/2,-a/2), (0,0)}`` for ``c = a/2``.

    A is the band ``(a-2c)/2 <= [y]_(a-c) <= (2a-3c-1)/2`` with the diagonal
    points ``(a/2 + k(a-c), -a/2 - k(a-c))``, ``k >= 0``, moved to B.
    """

    a: int
    c: int

    def __post_init__(self):
        a, c = self.a, self.c
        if a < 2 or a % 2:
            raise ValueError(f"DPartition needs even a >= 2, got a={a}")
        if c % 2 == 0 or not 0 < c <= a // 2:
            raise ValueError(f"DPartition needs odd c with 0 < c <= a/2, got c={c}")

    def color(self, x: Element) -> str:
        a, c = self.a, self.c
        m = a - c
        r = x[1] % m
        if not (a - 2 * c) // 2 <= r <= (2 * a - 3 * c - 1) // 2:
            return "B"
        if x[1] == -x[0] and x[0] >= a // 2 and (x[0] - a // 2) % m == 0:
            return "B"
        return "A"

    def descriptor(self) -> str:
        return f"D:a={self.a},c={self.c}"


@dataclass(frozen=True)
class EPartition(PartitionRule):
    """Avoids ``{(a,0),(0,0)} | {(c,d) : max(c, c+d) < a}`` for odd ``d < a``.

    Off the row ``y = 0`` the class is ``phi(y)``; on it, ``x < a`` is A.
    """

    a: int
    d: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError(f"EPartition needs a >= 1, got a={self.a}")
        if self.d % 2 == 0 or self.d >= self.a:
            raise ValueError(f"EPartition needs odd d < a, got d={self.d}")

    def phi(self, y: int) -> int:
        m = abs(self.d)
        r = y % m
        if 0 < r <= (m - 1) // 2:
            return 0
        if r == 0 and (y < 0 if self.d > 0 else y > 0):
            return 0
        return 1

    def color(self, x: Element) -> str:
        if x[1] == 0:
            return "A" if x[0] < self.a else "B"
        return "A" if self.phi(x[1]) == 0 else "B"

    def descriptor(self) -> str:
        return f"E:a={self.a},d={self.d}"


@dataclass(frozen=True)
class ZeroPartition(PartitionRule):
    """Avoids ``{(0,0)} | {(e,f) : f = d}`` for odd ``d``.

    A is ``[y]_|d| <= (|d|-1)/2`` minus the ray ``y = kd``, ``k >= 1``.
    """

    d: int

    def __post_init__(self):
        if self.d % 2 == 0:
            raise ValueError(f"ZeroPartition needs odd d, got d={self.d}")

    def color(self, x: Element) -> str:
        d = self.d
        m = abs(d)
        y = x[1]
        if y % m > (m - 1) // 2:
            return "B"
        if y % d == 0 and y // d >= 1:
            return "B"
        return "A"

    def descriptor(self) -> str:
        return f"Z:d={self.d}"


@dataclass(frozen=True)
class DZeroPartition(PartitionRule):
    """Avoids ``{(a,-a), (0,0)}`` for even ``a``.

    Diagonal points ``(x,-x)``, ``x >= 1``, are coloured by ``x mod a``: residues
    in ``(0, a/2]`` go to A, the rest to B, and ``(0,0)`` to A.  Off the
    diagonal, ``(w,z)`` takes the class opposite to the diagonal residue ``z mod a``.
    The only products landing in the target are ``(x,-x)(0,x) = (0,0)`` and
    ``(x,-x)(w,x-a) = (a,-a)`` with ``w <= a``, which this colouring splits.
    """

    a: int

    def __post_init__(self):
        if self.a < 2 or self.a % 2:
            raise ValueError(f"DZeroPartition needs even a >= 2, got a={self.a}")

    def _diag(self, r: int) -> str:
        return "B" if r == 0 or r > self.a // 2 else "A"

    def color(self, x: Element) -> str:
        if x[1] == -x[0]:
            return "A" if x[0] == 0 else self._diag(x[0] % self.a)
        return "A" if self._diag(x[1] % self.a) == "B" else "B"

    def descriptor(self) -> str:
        return f"DZ:a={self.a}"


@dataclass(frozen=True)
class StarredRule(PartitionRule):
    """Transport of a rule along the adjoint: ``x`` gets the class of ``x*``."""

    inner: PartitionRule

    def color(self, x: Element) -> str:
        return self.inner.color(adjoint(x))

    def descriptor(self) -> str:
        return f"star({self.inner.descriptor()})"


@dataclass(frozen=True)
class ExplicitMap(PartitionRule):
    classes: Mapping[Element, str] = field(hash=False)

    def __post_init__(self):
        bad = {v for v in self.classes.values() if v not in ("A", "B")}
        if bad:
            raise ValueError(f"explicit map uses unknown classes {sorted(bad)}")

    def color(self, x: Element) -> str:
        try:
            return self.classes[x]
        except KeyError:
            raise KeyError(f"{x} is not covered by the explicit map") from None

    def descriptor(self) -> str:
        return "explicit"


def color(rule: PartitionRule, x: Element) -> str:
    return rule.color(Element(*x))


def star_partition(rule: PartitionRule) -> PartitionRule:
    if isinstance(rule, StarredRule):
        return rule.inner
    if isinstance(rule, ParitySplit):
        return rule
    if isinstance(rule, ExplicitMap):
        return ExplicitMap({adjoint(x): c for x, c in rule.classes.items()})
    return StarredRule(rule)


def explicit_map(rule: PartitionRule, w: Union[Window, int]) -> ExplicitMap:
    n = w.n if isinstance(w, Window) else int(w)
    return ExplicitMap({x: rule.color(x) for x in _window_elements(n)})


_RULE_RE = re.compile(r"^(D|E|Z|DZ):(.*)$")


def parse_rule(text: str) -> PartitionRule:
    """Parse ``parity``, ``D:a=8,c=3``, ``E:a=6,d=5``, ``Z:d=5``, ``DZ:a=4`` or ``star(...)``."""
    t = text.strip()
    if t == "parity":
        return ParitySplit()
    if t.startswith("star(") and t.endswith(")"):
        return star_partition(parse_rule(t[5:-1]))
    m = _RULE_RE.match(t)
    if not m:
        raise ValueError(f"unknown rule descriptor {text!r}")
    params = _parse_params(m.group(2))
    kind = m.group(1)
    expected = {"D": {"a", "c"}, "E": {"a", "d"}, "Z": {"d"}, "DZ": {"a"}}[kind]
    if set(params) != expected:
        raise ValueError(f"rule {kind} takes parameters {sorted(expected)}, got {sorted(params)}")
    cls = {"D": DPartition, "E": EPartition, "Z": ZeroPartition, "DZ": DZeroPartition}[kind]
    return cls(**params)


def _parse_params(text: str) -> dict[str, int]:
    params: dict[str, int] = {}
    for item in filter(None, (p.strip() for p in text.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"malformed parameter {item!r}")
        try:
            params[key.strip()] = int(value)
        except ValueError:
            raise ValueError(f"parameter {key.strip()} must be an integer, got {value!r}") from None
    return params


def render_grid(rule: PartitionRule, rows: Iterable[int], cols: Iterable[int]) -> str:
    cols = list(cols)
    lines = []
    for x in rows:
        cells = []
        for y in cols:
            if x < 0 or x + y < 0:
                cells.append(".")
            else:
                cells.append("0" if rule.color(Element(x, y)) == "A" else "1")
        lines.append("".join(cells))
    return "\n".join(lines)


@dataclass(frozen=True)
class Violation:
    """Same-class pair ``(s, t)`` whose product ``st`` lies in the target."""

    s: Element
    t: Element
    product: Element

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        return f"{self.s}*{self.t}={self.product}"


def window_colors(rule: PartitionRule, n: int) -> np.ndarray:
    return np.fromiter(
        (rule.color(x) == "B" for x in _window_elements(n)), dtype=bool, count=(n + 1) ** 2
    )


def partition_avoids(rule: PartitionRule, U, w: Union[Window, int]) -> Union[bool, Violation]:
    """``True`` when no two distinct same-class window elements multiply into ``U``.

    Otherwise the violation with the lexicographically first ``(s, t)`` in
    window order.
    """
    n = w.n if isinstance(w, Window) else int(w)
    U = as_target(U)
    cls = window_colors(rule, n)
    hit = target_mask(U, 2 * n)[product_codes(n)]
    hit &= cls[:, None] == cls[None, :]
    np.fill_diagonal(hit, False)
    flat = np.flatnonzero(hit.ravel())
    if flat.size == 0:
        return True
    i, j = divmod(int(flat[0]), (n + 1) ** 2)
    V = _window_elements(n)
    return Violation(V[i], V[j], multiply(V[i], V[j]))


def partition_avoids_bruteforce(rule: PartitionRule, U, w: Union[Window, int]) -> Union[bool, Violation]:
    """Reference implementation of :func:`partition_avoids` over all ordered pairs."""
    n = w.n if isinstance(w, Window) else int(w)
    U = as_target(U)
    V = _window_elements(n)
    cols = [rule.color(x) for x in V]
    for i, s in enumerate(V):
        for j, t in enumerate(V):
            if i != j and cols[i] == cols[j]:
                st = multiply(s, t)
                if st in U:
                    return Violation(s, t, st)
    return True
