"""Finite windows of B, associated graphs and their certificates.

The window of size ``n`` is ``{(a, b) : 0 <= a <= n, 0 <= a + b <= n}``.  It
is closed under the adjoint and every product of two of its elements lies in
the window of size ``2n``, so edge predicates can be evaluated on a dense
``(2n+1) x (2n+1)`` grid indexed by ``(a, a + b)``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Protocol, Union

import numpy as np

from .core import Element, adjoint, format_elements, multiply, parse_element


class TargetSet(Protocol):
    """Anything supporting ``x in U`` for elements ``x`` of B."""

    def __contains__(self, x: object) -> bool: ...


@dataclass(frozen=True)
class FiniteTarget:
    elements: tuple[Element, ...]

    def __init__(self, elements: Iterable[Element]):
        elems = tuple(Element(*e) for e in elements)
        if len(set(elems)) != len(elems):
            raise ValueError("target set contains duplicates")
        object.__setattr__(self, "elements", tuple(sorted(elems, key=window_key)))

    def __contains__(self, x: object) -> bool:
        return x in self._set

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def _set(self) -> frozenset:
        return frozenset(self.elements)

    def __str__(self) -> str:
        return "{" + format_elements(self.elements) + "}"


def as_target(U) -> TargetSet:
    """Wrap plain collections of elements as a :class:`FiniteTarget`."""
    if isinstance(U, (set, frozenset, list, tuple)) or isinstance(U, Iterator):
        return FiniteTarget(dict.fromkeys(Element(*e) for e in U))
    return U


def membership(U: TargetSet, x: Element) -> bool:
    return Element(*x) in U


@dataclass(frozen=True)
class Window:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("window size must be nonnegative")

    def __contains__(self, x: object) -> bool:
        a, b = x  # type: ignore[misc]
        return 0 <= a <= self.n and 0 <= a + b <= self.n

    def __len__(self) -> int:
        return (self.n + 1) ** 2

    def elements(self) -> list[Element]:
        return window_elements(self)

    def index(self, x: Element) -> int:
        return x[0] * (self.n + 1) + x[0] + x[1]


def window_key(x: Element) -> tuple[int, int]:
    return (x[0], x[0] + x[1])


def window_elements(w: Union[Window, int]) -> list[Element]:
    n = w.n if isinstance(w, Window) else int(w)
    return list(_window_elements(n))


@lru_cache(maxsize=64)
def _window_elements(n: int) -> tuple[Element, ...]:
    return tuple(Element(a, t - a) for a in range(n + 1) for t in range(n + 1))


@lru_cache(maxsize=64)
def _coords(n: int) -> tuple[np.ndarray, np.ndarray]:
    a, t = np.divmod(np.arange((n + 1) ** 2, dtype=np.int64), n + 1)
    return a, t - a


@lru_cache(maxsize=3)
def product_codes(n: int) -> np.ndarray:
    """``codes[i, j]`` is the grid index in window ``2n`` of ``v_i * v_j``."""
    a, b = _coords(n)
    pa = np.maximum(a[None, :] + b[None, :], a[:, None]) - b[None, :]
    pb = b[:, None] + b[None, :]
    m = 2 * n
    codes = (pa * (m + 1) + pa + pb).astype(np.int32)
    codes.setflags(write=False)
    return codes


def restrict(U: TargetSet, m: int) -> list[Element]:
    """Elements of ``U`` lying in the window of size ``m``, in window order."""
    elements = getattr(U, "elements", None)
    if elements is not None:
        w = Window(m)
        return sorted((e for e in elements if e in w), key=window_key)
    return [x for x in _window_elements(m) if x in U]


def target_mask(U: TargetSet, m: int) -> np.ndarray:
    """Boolean vector over the window of size ``m``: ``mask[index(x)] = x in U``."""
    mask = np.zeros((m + 1) ** 2, dtype=bool)
    w = Window(m)
    for x in restrict(U, m):
        mask[w.index(x)] = True
    return mask


@dataclass(frozen=True)
class AssociatedGraph:
    """Graph on the window elements; ``adj[i]`` lists neighbour indices in ascending order."""

    window: Window
    vertices: tuple[Element, ...]
    adj: tuple[tuple[int, ...], ...]
    target: object = field(repr=False, compare=False, default=None)

    def index(self, x: Element) -> int:
        return self.window.index(x)

    def __contains__(self, x: object) -> bool:
        return x in self.window

    def has_edge(self, u: Element, v: Element) -> bool:
        if u not in self.window or v not in self.window:
            return False
        return self.index(v) in self._adjsets[self.index(u)]

    @property
    def _adjsets(self) -> list[frozenset]:
        cached = self.__dict__.get("_adjsets_cache")
        if cached is None:
            cached = [frozenset(n) for n in self.adj]
            object.__setattr__(self, "_adjsets_cache", cached)
        return cached

    def edges(self) -> list[tuple[Element, Element]]:
        V = self.vertices
        return [(V[i], V[j]) for i, nbrs in enumerate(self.adj) for j in nbrs if i < j]

    def edge_count(self) -> int:
        return sum(len(n) for n in self.adj) // 2

    def degree(self, i: int) -> int:
        return len(self.adj[i])


def associated_graph(w: Union[Window, int], U) -> AssociatedGraph:
    """Edge ``{r, s}`` iff ``r != s`` and ``rs`` or ``sr`` lies in ``U``."""
    w = w if isinstance(w, Window) else Window(int(w))
    U = as_target(U)
    mask = target_mask(U, 2 * w.n)
    E = mask[product_codes(w.n)]
    E = E | E.T
    np.fill_diagonal(E, False)
    adj = tuple(tuple(int(j) for j in np.flatnonzero(row)) for row in E)
    return AssociatedGraph(w, _window_elements(w.n), adj, U)


def associated_graph_bruteforce(w: Union[Window, int], U) -> AssociatedGraph:
    """Reference construction using :func:`core.multiply` on every ordered pair."""
    w = w if isinstance(w, Window) else Window(int(w))
    U = as_target(U)
    V = _window_elements(w.n)
    nbrs: list[set[int]] = [set() for _ in V]
    for i, r in enumerate(V):
        for j, s in enumerate(V):
            if i != j and multiply(r, s) in U:
                nbrs[i].add(j)
                nbrs[j].add(i)
    return AssociatedGraph(w, V, tuple(tuple(sorted(n)) for n in nbrs), U)


# -- certificates ---------------------------------------------------------


@dataclass(frozen=True)
class TwoColoring:
    """Class map ``element -> 'A' | 'B'``."""

    classes: Mapping[Element, str]

    kind = "two-coloring"

    def color(self, x: Element) -> str:
        return self.classes[x]


@dataclass(frozen=True)
class OddCycle:
    cycle: tuple[Element, ...]

    kind = "odd-cycle"

    def __len__(self) -> int:
        return len(self.cycle)


Certificate = Union[TwoColoring, OddCycle]


def bipartition_or_odd_cycle(g: AssociatedGraph) -> Certificate:
    """Breadth-first 2-colouring; the first monochromatic edge yields an odd cycle."""
    V = g.vertices
    color = [-1] * len(V)
    parent = [-1] * len(V)
    depth = [0] * len(V)
    for root in range(len(V)):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return OddCycle(tuple(V[i] for i in _close_cycle(u, v, parent, depth)))
    return TwoColoring({x: "AB"[c] for x, c in zip(V, color)})


def _close_cycle(u: int, v: int, parent: list[int], depth: list[int]) -> list[int]:
    left, right = [u], [v]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    # left ends at the common ancestor; right repeats it
    return left + right[-2::-1]


def verify_certificate(g: AssociatedGraph, c: Certificate) -> bool:
    """Re-check ``c`` against ``g`` using only the target set and multiplication."""
    U = g.target
    if U is None:
        raise ValueError("graph carries no target set")

    def adjacent(r: Element, s: Element) -> bool:
        return r != s and (multiply(r, s) in U or multiply(s, r) in U)

    if isinstance(c, OddCycle):
        cyc = [Element(*x) for x in c.cycle]
        if len(cyc) < 3 or len(cyc) % 2 == 0:
            return False
        if any(x not in g.window for x in cyc):
            return False
        return all(adjacent(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
    if isinstance(c, TwoColoring):
        classes = c.classes
        try:
            cols = {x: classes[x] for x in g.vertices}
        except KeyError:
            return False
        if any(col not in ("A", "B") for col in cols.values()):
            return False
        for u in restrict(U, 2 * g.window.n):
            for r, s in factorizations(u, g.window.n):
                if r != s and cols[r] == cols[s]:
                    return False
        return True
    return False


def factorizations(u: Element, n: int) -> Iterator[tuple[Element, Element]]:
    """All pairs ``(r, s)`` of window-``n`` elements with ``r * s == u``.

    Solves ``(x, y)(c, d) = (max(c+d, x) - d, y + d) = (p, q)`` directly:
    ``y = q - d`` and either ``c < p`` and ``x = p + d``, or ``c == p`` and
    ``x <= p + d``.
    """
    p, q = u
    for c in range(min(p, n) + 1):
        for d in range(-c, n - c + 1):
            y = q - d
            xs = range(p + d, p + d + 1) if c < p else range(0, p + d + 1)
            for x in xs:
                if 0 <= x <= n and 0 <= x + y <= n:
                    r, s = Element(x, y), Element(c, d)
                    assert multiply(r, s) == u
                    yield r, s


class Undecided(Exception):
    """A search exhausted its node budget without reaching a decision."""

    def __init__(self, message: str, nodes: int):
        super().__init__(message)
        self.nodes = nodes


def k_colorable(g: AssociatedGraph, k: int, budget: int = 1_000_000) -> Optional[dict[Element, int]]:
    """Proper ``k``-colouring of ``g`` by backtracking, or ``None`` if none exists.

    Components are searched independently, vertices in descending degree
    order; a new colour is only opened once per node (symmetry breaking).
    Raises :class:`Undecided` when more than ``budget`` nodes are expanded.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n_v = len(g.vertices)
    colors = [-1] * n_v
    nodes = 0
    seen = [False] * n_v
    for root in sorted(range(n_v), key=lambda i: (-g.degree(i), i)):
        if seen[root]:
            continue
        comp = []
        stack = [root]
        seen[root] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        order = sorted(comp, key=lambda i: (-g.degree(i), i))
        ok, nodes = _color_component(g, order, k, colors, nodes, budget)
        if not ok:
            return None
    coloring = {g.vertices[i]: c for i, c in enumerate(colors)}
    for i, nbrs in enumerate(g.adj):
        for j in nbrs:
            if colors[i] == colors[j] or not 0 <= colors[i] < k:
                raise AssertionError("k_colorable produced an improper colouring")
    return coloring


def _color_component(g, order, k, colors, nodes, budget):
    pos = 0
    choice = [0] * len(order)
    # iterative backtracking: choice[pos] is the next colour to try at order[pos]
    while 0 <= pos < len(order):
        v = order[pos]
        colors[v] = -1
        used_max = max((colors[order[i]] for i in range(pos)), default=-1)
        limit = min(k, used_max + 2)
        c = choice[pos]
        placed = False
        while c < limit:
            if all(colors[u] != c for u in g.adj[v]):
                nodes += 1
                if nodes > budget:
                    raise Undecided(f"k-colouring search exceeded {budget} nodes", nodes)
                colors[v] = c
                choice[pos] = c + 1
                placed = True
                break
            c += 1
        if placed:
            pos += 1
            if pos < len(order):
                choice[pos] = 0
        else:
            choice[pos] = 0
            pos -= 1
    return pos == len(order), nodes


# -- serialisation ---------------------------------------------------------


def to_dot(g: AssociatedGraph, coloring: Optional[TwoColoring] = None, name: str = "G") -> str:
    """DOT text for ``g``; with a colouring, class A is filled lightblue and B salmon."""
    fill = {"A": "lightblue", "B": "salmon"}
    lines = [f"graph {name} {{"]
    for i, x in enumerate(g.vertices):
        attrs = [f'label="{x}"']
        if coloring is not None:
            cls = coloring.classes[x]
            attrs += [f'class="{cls}"', "style=filled", f'fillcolor="{fill[cls]}"']
        lines.append(f"  v{i} [{', '.join(attrs)}];")
    for i, nbrs in enumerate(g.adj):
        for j in nbrs:
            if i < j:
                lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def certificate_to_dict(c: Certificate) -> dict:
    if isinstance(c, OddCycle):
        return {"kind": OddCycle.kind, "elements": [str(x) for x in c.cycle]}
    by_class: dict[str, list[str]] = {"A": [], "B": []}
    for x in sorted(c.classes, key=window_key):
        by_class[c.classes[x]].append(str(x))
    return {
        "kind": TwoColoring.kind,
        "elements": [str(x) for x in sorted(c.classes, key=window_key)],
        "classes": by_class,
    }


def certificate_from_dict(data: Mapping) -> Certificate:
    kind = data.get("kind")
    if kind == OddCycle.kind:
        return OddCycle(tuple(parse_element(s) for s in data["elements"]))
    if kind == TwoColoring.kind:
        classes = {}
        for cls, members in data["classes"].items():
            if cls not in ("A", "B"):
                raise ValueError(f"unknown class {cls!r}")
            for s in members:
                x = parse_element(s)
                if x in classes:
                    raise ValueError(f"{x} assigned to two classes")
                classes[x] = cls
        return TwoColoring(classes)
    raise ValueError(f"unknown certificate kind {kind!r}")


def certificate_to_json(c: Certificate) -> str:
    return json.dumps(certificate_to_dict(c), indent=2)


def certificate_from_json(text: str) -> Certificate:
    return certificate_from_dict(json.loads(text))


def adjoint_closed(w: Window) -> bool:
    return all(adjoint(x) in w for x in window_elements(w))
