"""Odd cycles in associated graphs that certify unavoidability.

Each constructor takes the parameters of one unavoidability argument, checks
its hypotheses and returns the cycle together with the finite target set it
refutes.  :func:`validate` re-checks a witness using only multiplication and
target membership.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .core import Element, adjoint, format_elements, multiply
from .window import FiniteTarget, TargetSet, as_target


class PreconditionError(ValueError):
    """Constructor parameters outside the hypotheses of its argument."""


@dataclass(frozen=True)
class Witness:
    cycle: tuple[Element, ...]
    target: TargetSet
    provenance: str

    @property
    def simple(self) -> bool:
        """``False`` when the closed walk revisits a vertex (still odd, still a certificate)."""
        return len(set(self.cycle)) == len(self.cycle)

    def edges(self):
        k = len(self.cycle)
        return [(self.cycle[i], self.cycle[(i + 1) % k]) for i in range(k)]

    def star(self) -> "Witness":
        """The adjoint cycle, refuting the adjoint target set."""
        target = FiniteTarget(adjoint(u) for u in self.target)  # type: ignore[attr-defined]
        prov = self.provenance[5:-1] if self.provenance.startswith("star(") else f"star({self.provenance})"
        return Witness(tuple(adjoint(x) for x in self.cycle), target, prov)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PreconditionError(message)


def _E(a: int, b: int) -> Element:
    _require(a >= 0 and a + b >= 0, f"({a},{b}) is not an element of B")
    return Element(a, b)


def _witness(cycle, target, provenance) -> Witness:
    return Witness(tuple(cycle), FiniteTarget(dict.fromkeys(target)), provenance)


def w_evenprop(a: int, b: int) -> Witness:
    """Triangle for a single even element ``(a,b)`` with ``a >= 1``, ``a+b >= 1``, ``b != 0``."""
    _require(b % 2 == 0, "b must be even")
    _require(b != 0 and a >= 1 and a + b >= 1, "need a >= 1, a+b >= 1 and b != 0")
    h = b // 2
    alpha = a - 1 if b >= 2 else a + h - 1
    p, q, r = _E(alpha, h), _E(a, h), _E(a + h, h)
    return _witness((p, q, r), [Element(a, b)], "evenprop")


def _d_element(a: int) -> None:
    _require(a >= 2 and a % 2 == 0, f"(a,-a) with a={a} is not in D")


def w_amalemma2(a: int, c: int, d: int) -> Witness:
    _d_element(a)
    _require(c >= 0 and c + d >= 1, "need c >= 0 and c+d >= 1")
    h = a // 2
    r, s, t = _E(h, -h), _E(h + 1, -h), _E(c, d + h)
    return _witness((r, s, t), [Element(a, -a), Element(c, d)], "amalemma2")


def w_amalemma4(a: int, c: int) -> Witness:
    _d_element(a)
    _require(c >= 0, "(c,-c) must be an element of B")
    _require(c != a and 2 * c > a, "need c != a and a/2 < c")
    h = a // 2
    r, s, t = _E(h, -h), _E(h + 1, -h), _E(c - h, h - c)
    return _witness((r, s, t), [Element(a, -a), Element(c, -c)], "amalemma4")


def w_amaprop5(a: int, c: int, e: int) -> Witness:
    _d_element(a)
    _require(c % 2 == 1 and e % 2 == 1, "c and e must be odd")
    _require(0 < c < e and 2 * e <= a, "need 0 < c < e <= a/2")
    r = _E(0, (a - c - e) // 2)
    s = _E((a + c - e) // 2, -((a + c - e) // 2))
    t = _E((a - c + e) // 2, -((a - c + e) // 2))
    return _witness((r, s, t), [Element(a, -a), Element(c, -c), Element(e, -e)], "amaprop5")


def w_amaprop6(a: int, c: int) -> Witness:
    _d_element(a)
    _require(0 < c and 2 * c < a, "need 0 < c < a/2")
    p, q = Element(0, 0), Element(c, -c)
    r, s, t = Element(a - c, c - a), Element(0, a - c), Element(a, -a)
    return _witness((p, q, r, s, t), [Element(a, -a), Element(c, -c), Element(0, 0)], "amaprop6")


def w_a0blemma(a: int, c: int, d: int) -> Witness:
    _require(a >= 1, "(a,0) must be in E")
    _E(c, d)
    _require(max(c, c + d) >= a, "need max{c, c+d} >= a")
    _require((c, d) != (a, 0), "(c,d) must differ from (a,0)")
    return _witness(
        (Element(0, 0), Element(a, 0), Element(c, d)), [Element(a, 0), Element(c, d)], "a0blemma"
    )


def w_a0lem(a: int, c: int, d: int, e: int, f: int) -> Witness:
    _require(a >= 1, "(a,0) must be in E")
    _E(c, d)
    _E(e, f)
    _require(d % 2 == 1 and f % 2 == 1, "d and f must be odd")
    _require(d != f, "need d != f")
    _require(max(c, c + d, e, e + f) < a, "need max{c, c+d, e, e+f} < a")
    target = [Element(a, 0), Element(c, d), Element(e, f)]
    if d > f:
        c, d, e, f = e, f, c, d
    x, y = (f - d) // 2, (f + d) // 2
    r, s, t = _E(c + y, -x), _E(a, x), _E(a, -x)
    if e + x < a:
        p, q = _E(e, x), _E(min(c, e + x), y)
        case = "e+x<a"
    elif e < c:
        p, q = _E(0, x), _E(e, y)
        case = "e+x>=a,e<c"
    else:
        p, q = _E(e + y, x), _E(c, y)
        case = "e+x>=a,e>=c"
    return _witness((p, q, r, s, t), target, f"a0lem[{case}]")


def w_00prop1(c: int, d: int, e: int, f: int) -> Witness:
    _E(c, d)
    _E(e, f)
    _require(d % 2 == 1 and f % 2 == 1, "d and f must be odd")
    _require(d != f, "need d != f")
    target = [Element(0, 0), Element(c, d), Element(e, f)]
    if d > f:
        c, d, e, f = e, f, c, d
    x, y = (f - d) // 2, (f + d) // 2
    if c <= e:
        cycle = (_E(0, x), _E(x, -x), _E(c, y), _E(e + y, x), _E(e, y))
        case = "c<=e"
    elif e + y >= 0:
        cycle = (_E(0, x), _E(x, -x), _E(c, y), _E(c + y, -x), _E(e, y))
        case = "e<c,e+y>=0"
    else:
        cycle = (_E(0, x), _E(e + x, y), _E(c + y, -x), _E(c - x, y), _E(x, -x))
        case = "e<c,e+y<0"
    return _witness(cycle, target, f"00prop1[{case}]")


CONSTRUCTORS = {
    "evenprop": w_evenprop,
    "amalemma2": w_amalemma2,
    "amalemma4": w_amalemma4,
    "amaprop5": w_amaprop5,
    "amaprop6": w_amaprop6,
    "a0blemma": w_a0blemma,
    "a0lem": w_a0lem,
    "00prop1": w_00prop1,
}


def validate(witness: Witness) -> bool:
    """Odd length at least 3, consecutive vertices distinct, every consecutive pair an edge."""
    cyc = [Element(*x) for x in witness.cycle]
    U = witness.target
    if len(cyc) < 3 or len(cyc) % 2 == 0:
        return False
    if any(x[0] < 0 or x[0] + x[1] < 0 for x in cyc):
        return False
    for i, u in enumerate(cyc):
        v = cyc[(i + 1) % len(cyc)]
        if u == v:
            return False
        if multiply(u, v) not in U and multiply(v, u) not in U:
            return False
    return True


def edge_products(witness: Witness) -> list[dict]:
    out = []
    for u, v in witness.edges():
        uv, vu = multiply(u, v), multiply(v, u)
        if uv in witness.target:
            prod, order = uv, "uv"
        else:
            prod, order = vu, "vu"
        out.append(
            {"pair": [str(u), str(v)], "order": order, "product": str(prod), "in_target": prod in witness.target}
        )
    return out


def witness_to_dict(witness: Witness) -> dict:
    target = getattr(witness.target, "elements", None)
    return {
        "provenance": witness.provenance,
        "cycle": format_elements(witness.cycle),
        "target": format_elements(target) if target is not None else str(witness.target),
        "simple": witness.simple,
        "products": edge_products(witness),
    }


def witness_to_text(witness: Witness) -> str:
    lines = [f"witness {witness.provenance}", f"cycle {format_elements(witness.cycle)}"]
    for item in edge_products(witness):
        u, v = item["pair"]
        lhs = f"{u}{v}" if item["order"] == "uv" else f"{v}{u}"
        verdict = "in U" if item["in_target"] else "NOT in U"
        lines.append(f"  {lhs} = {item['product']}  {verdict}")
    if not witness.simple:
        lines.append("  note: closed walk revisits a vertex")
    return "\n".join(lines)


def witness_to_json(witness: Witness) -> str:
    return json.dumps(witness_to_dict(witness), indent=2)


def make_witness(cycle: Sequence[Element], target, provenance: str = "explicit") -> Witness:
    return Witness(tuple(Element(*x) for x in cycle), as_target(target), provenance)
