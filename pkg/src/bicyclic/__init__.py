"""Avoidable sets in the bicyclic inverse semigroup."""

from .core import (
    Element,
    EvenClass,
    NotAnElement,
    Parity,
    adjoint,
    apply_shift,
    classify_even,
    evaluate_word,
    make_element,
    multiply,
    parity,
    parse_element,
    parse_elements,
)
from .classifier import (
    MaximalFamily,
    Verdict,
    classify,
    containing_families,
    family_partition,
    maximality_probe,
    star_set,
)
from .partitions import partition_avoids, render_grid, star_partition
from .window import Window, associated_graph, bipartition_or_odd_cycle, k_colorable, verify_certificate
from .witnesses import Witness, validate

__version__ = "0.1.0"

__all__ = [
    "Element", "EvenClass", "NotAnElement", "Parity", "adjoint", "apply_shift", "classify_even",
    "evaluate_word", "make_element", "multiply", "parity", "parse_element", "parse_elements",
    "MaximalFamily", "Verdict", "classify", "containing_families", "family_partition",
    "maximality_probe", "star_set", "partition_avoids", "render_grid", "star_partition",
    "Window", "associated_graph", "bipartition_or_odd_cycle", "k_colorable", "verify_certificate",
    "Witness", "validate",
]
