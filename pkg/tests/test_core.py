import pytest
from hypothesis import given

from bicyclic.core import (
    Element,
    EvenClass,
    NotAnElement,
    Parity,
    adjoint,
    apply_shift,
    classify_even,
    evaluate_word,
    format_elements,
    make_element,
    multiply,
    multiply_arrays,
    parity,
    parse_element,
    parse_elements,
)
from bicyclic.window import window_elements

from conftest import elements, shift_oracle


def test_make_element():
    assert make_element(0, 0) == Element(0, 0)
    assert make_element(2, -2) == (2, -2)
    with pytest.raises(NotAnElement):
        make_element(1, -2)
    with pytest.raises(NotAnElement):
        make_element(-1, 3)


@pytest.mark.parametrize(
    "x, y, expected",
    [
        ((0, 0), (2, -1), (2, -1)),
        ((2, 1), (1, 1), (1, 2)),
        ((1, -1), (2, -1), (2, -2)),
    ],
)
def test_multiply_examples(x, y, expected):
    x, y = Element(*x), Element(*y)
    assert multiply(x, y) == expected
    assert x * y == expected
    assert shift_oracle(x, y) == expected


@pytest.mark.parametrize("x, expected", [((3, 0), (3, 0)), ((0, 1), (1, -1)), ((0, 4), (4, -4))])
def test_adjoint_examples(x, expected):
    assert adjoint(Element(*x)) == expected
    assert Element(*x).star == expected


def test_apply_shift():
    assert apply_shift(Element(2, -1), 5) == 4
    assert apply_shift(Element(2, -1), 1) is None
    assert apply_shift(Element(0, 0), 7) == 7


def test_parity():
    assert parity(Element(0, 0)) is Parity.EVEN
    assert parity(Element(1, 1)) is Parity.ODD
    assert parity(Element(0, 4)) is Parity.EVEN
    assert parity(Element(3, -3)) is Parity.ODD


@pytest.mark.parametrize(
    "x, cls",
    [
        ((4, -4), EvenClass.D),
        ((2, -2), EvenClass.D),
        ((5, 0), EvenClass.E),
        ((1, 0), EvenClass.E),
        ((0, 2), EvenClass.F),
        ((0, 4), EvenClass.F),
        ((2, 2), EvenClass.INTERIOR_EVEN),
        ((3, -2), EvenClass.INTERIOR_EVEN),
        ((0, 0), EvenClass.IDENTITY),
        ((3, -3), EvenClass.ODD),
        ((0, 1), EvenClass.ODD),
    ],
)
def test_classify_even(x, cls):
    assert classify_even(Element(*x)) is cls


def test_classify_even_matches_definitions_on_window():
    for x in window_elements(12):
        a, b = x
        tag = classify_even(x)
        assert (tag is EvenClass.IDENTITY) == (x == (0, 0))
        assert (tag is EvenClass.D) == (b == -a and a >= 2 and a % 2 == 0)
        assert (tag is EvenClass.E) == (b == 0 and a >= 1)
        assert (tag is EvenClass.F) == (a == 0 and b >= 2 and b % 2 == 0)
        assert (tag is EvenClass.ODD) == (b % 2 == 1)


def test_d_and_f_are_adjoint():
    for x in window_elements(16):
        assert (classify_even(x) is EvenClass.D) == (classify_even(adjoint(x)) is EvenClass.F)


@pytest.mark.parametrize(
    "word, expected",
    [(["G"], (0, 1)), (["G*", "G"], (0, 0)), (["G", "G*"], (1, 0)), ("GG*G", (0, 1)), ("G*G*GG", (0, 0)), ("GGG*", (1, 1))],
)
def test_evaluate_word(word, expected):
    assert evaluate_word(word) == expected


def test_evaluate_word_rejects():
    with pytest.raises(ValueError):
        evaluate_word([])
    with pytest.raises(ValueError):
        evaluate_word("GH")


def test_every_element_is_a_word():
    # (a, b) = G^(a+b) G*^a: the right factor acts first
    for x in window_elements(6):
        word = ["G"] * x.top + ["G*"] * x.a
        if word:
            assert evaluate_word(word) == x


def test_parse_and_format():
    assert parse_element(" ( 3 , -1 ) ") == (3, -1)
    assert parse_elements("(8,-8);(3,-3)") == [(8, -8), (3, -3)]
    assert parse_elements("") == []
    assert format_elements([Element(1, 2), Element(0, 0)]) == "(1,2);(0,0)"
    with pytest.raises(ValueError):
        parse_element("(1,2")
    with pytest.raises(NotAnElement):
        parse_element("(0,-1)")


def test_multiply_arrays_matches_scalar():
    import numpy as np

    W = window_elements(8)
    a = np.array([x.a for x in W])
    b = np.array([x.b for x in W])
    pa, pb = multiply_arrays(a[:, None], b[:, None], a[None, :], b[None, :])
    for i, x in enumerate(W):
        for j, y in enumerate(W):
            assert (pa[i, j], pb[i, j]) == multiply(x, y)


def test_big_integers_do_not_wrap():
    x = Element(10**30, -(10**30))
    assert multiply(adjoint(x), x) == (10**30, 0)


@given(elements(), elements(), elements())
def test_associative(x, y, z):
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


@given(elements())
def test_inverse_semigroup_axioms(x):
    xs = adjoint(x)
    assert multiply(multiply(x, xs), x) == x
    assert multiply(multiply(xs, x), xs) == xs
    assert adjoint(xs) == x
    assert multiply(Element(0, 0), x) == x == multiply(x, Element(0, 0))


@given(elements(), elements())
def test_adjoint_reverses_products(x, y):
    assert adjoint(multiply(x, y)) == multiply(adjoint(y), adjoint(x))


@given(elements(), elements())
def test_closure_and_shift_representation(x, y):
    p = multiply(x, y)
    assert p.a >= 0 and p.top >= 0
    assert p == shift_oracle(x, y)
    for n in range(0, 3 * 40):
        inner = apply_shift(y, n)
        assert apply_shift(p, n) == (None if inner is None else apply_shift(x, inner))


@given(elements(), elements())
def test_parity_rule(x, y):
    assert (parity(multiply(x, y)) is Parity.ODD) == (parity(x) is not parity(y))


@given(elements())
def test_idempotents_are_self_adjoint(x):
    e = multiply(x, adjoint(x))
    assert multiply(e, e) == e
    assert adjoint(e) == e
    assert e.b == 0
