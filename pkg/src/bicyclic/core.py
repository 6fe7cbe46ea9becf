"""Arithmetic in the bicyclic inverse semigroup.

Elements are pairs ``(a, b)`` with ``a >= 0`` and ``a + b >= 0``.  The pair
acts on the nonnegative integers as the partial bijection ``n -> n + b``
defined for ``n >= a``; multiplication is composition of these maps, with
the right factor applied first.
"""

from __future__ import annotations

import enum
import re
from typing import Iterable, NamedTuple, Optional, Sequence


class Element(NamedTuple):
    """An element ``(a, b)`` of B.

    Construct through :func:`make_element` (or :meth:`Element.of`) when the
    coordinates are untrusted; the bare tuple constructor does not validate.
    """

    a: int
    b: int

    @classmethod
    def of(cls, a: int, b: int) -> "Element":
        return make_element(a, b)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"

    def __mul__(self, other):  # type: ignore[override]
        if isinstance(other, Element):
            return multiply(self, other)
        return NotImplemented

    @property
    def star(self) -> "Element":
        return adjoint(self)

    @property
    def top(self) -> int:
        """``a + b``: the start of the image of the partial shift."""
        return self.a + self.b


IDENTITY = Element(0, 0)
GENERATOR = Element(0, 1)


class NotAnElement(ValueError):
    """Raised for pairs outside B."""


def make_element(a: int, b: int) -> Element:
    a, b = int(a), int(b)
    if a < 0 or a + b < 0:
        raise NotAnElement(f"({a},{b}) is not an element of B: need a >= 0 and a+b >= 0")
    return Element(a, b)


def multiply(x: Element, y: Element) -> Element:
    a, b = x
    c, d = y
    return Element(max(c + d, a) - d, b + d)


def adjoint(x: Element) -> Element:
    return Element(x[0] + x[1], -x[1])


def apply_shift(x: Element, n: int) -> Optional[int]:
    """Image of ``n`` under the partial shift of ``x``; ``None`` when ``n < a``."""
    if n < x[0]:
        return None
    return n + x[1]


def multiply_arrays(a, b, c, d):
    """Vectorised :func:`multiply` on numpy integer arrays.

    Returns the coordinate arrays of ``(a, b)(c, d)`` with the usual broadcasting.
    """
    import numpy as np

    return np.maximum(c + d, a) - d, b + d


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


def parity(x: Element) -> Parity:
    return Parity.ODD if x[1] % 2 else Parity.EVEN


def is_odd(x: Element) -> bool:
    return x[1] % 2 == 1


class EvenClass(enum.Enum):
    """Position of an element in the even-element taxonomy.

    Only IDENTITY, D, E and F elements can belong to an avoidable set;
    INTERIOR_EVEN elements are unavoidable on their own.
    """

    IDENTITY = "identity"
    D = "D"
    E = "E"
    F = "F"
    INTERIOR_EVEN = "interior-even"
    ODD = "odd"


def classify_even(x: Element) -> EvenClass:
    a, b = x
    if b % 2:
        return EvenClass.ODD
    if a == 0 and b == 0:
        return EvenClass.IDENTITY
    if b == -a:
        # a + b = 0 with b even forces a even and, a != 0, a >= 2
        return EvenClass.D
    if b == 0:
        return EvenClass.E
    if a == 0:
        return EvenClass.F
    return EvenClass.INTERIOR_EVEN


def in_D(x: Element) -> bool:
    return classify_even(x) is EvenClass.D


def in_E(x: Element) -> bool:
    return classify_even(x) is EvenClass.E


def in_F(x: Element) -> bool:
    return classify_even(x) is EvenClass.F


_WORD_TOKEN = re.compile(r"G\*|G")


def evaluate_word(word: Sequence[str] | str) -> Element:
    """Multiply a word over ``G = (0,1)`` and ``G* = (1,-1)`` left to right.

    ``word`` is either a sequence of letters ``"G"`` / ``"G*"`` or a string
    such as ``"GG*G"``.
    """
    if isinstance(word, str):
        compact = word.replace(" ", "")
        letters = _WORD_TOKEN.findall(compact)
        if "".join(letters) != compact:
            raise ValueError(f"word {word!r} contains letters other than G and G*")
    else:
        letters = list(word)
    if not letters:
        raise ValueError("empty word")
    result: Optional[Element] = None
    for letter in letters:
        if letter == "G":
            g = GENERATOR
        elif letter == "G*":
            g = adjoint(GENERATOR)
        else:
            raise ValueError(f"unknown letter {letter!r}")
        result = g if result is None else multiply(result, g)
    assert result is not None
    return result


_ELEMENT_RE = re.compile(r"^\s*\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)\s*$")


def parse_element(text: str) -> Element:
    """Parse ``"(a,b)"`` (whitespace allowed) into a validated element."""
    m = _ELEMENT_RE.match(text)
    if not m:
        raise ValueError(f"malformed element {text!r}; expected '(a,b)'")
    return make_element(int(m.group(1)), int(m.group(2)))


def parse_elements(text: str) -> list[Element]:
    """Parse a ``;``-separated element list. Empty text gives an empty list."""
    parts = [p for p in text.split(";") if p.strip()]
    return [parse_element(p) for p in parts]


def format_elements(elements: Iterable[Element]) -> str:
    return ";".join(str(Element(*e)) for e in elements)
