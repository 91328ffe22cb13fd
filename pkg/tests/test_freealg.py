from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shirshov.errors import NonMonicError, ParseError, ZeroPolynomialError
from shirshov.poly import FreePolynomial, leading, parse_polynomial
from shirshov.reduction import Reducer, normal_form, reduce_with_trace
from shirshov.words import (Alphabet, DegLex, ShirshovLex, compare_words, make_order, parse_word,
                            shirshov_less)

A2 = Alphabet.standard(2)
A3 = Alphabet.standard(3)

words3 = st.lists(st.integers(0, 2), max_size=6).map(tuple)


def test_parse_and_format_words():
    assert parse_word("x2 x1 x1", A2) == (1, 0, 0)
    assert parse_word("1", A2) == ()
    assert A2.format(()) == "1"
    with pytest.raises(ParseError):
        parse_word("x3", A2)


def test_deglex_examples():
    o = DegLex(A2)
    assert compare_words(o, (1, 0), (0, 1)) == 1
    assert compare_words(o, (0, 0, 0), (1, 1)) == 1
    assert o.max([(0,), (1, 0), (0, 1)]) == (1, 0)


def test_prefix_is_greater_in_shirshov_lex():
    assert shirshov_less((1, 0, 0), (1, 0))
    assert not ShirshovLex(A2).is_monomial
    assert make_order("deglex", A2).is_monomial


@given(words3, words3, words3)
def test_deglex_is_monomial(u, v, a):
    o = DegLex(A3)
    if o.key(u) < o.key(v):
        assert o.key(a + u) < o.key(a + v)
        assert o.key(u + a) < o.key(v + a)


@given(words3, words3)
def test_deglex_total(u, v):
    c = compare_words(DegLex(A3), u, v)
    assert (c == 0) == (u == v)
    assert compare_words(DegLex(A3), v, u) == -c


def test_polynomial_parse_roundtrip():
    p = parse_polynomial("x2 x1 - 1/2*x1 x2 + 3", A2)
    assert p.coefficient((1, 0)) == 1
    assert p.coefficient((0, 1)) == Fraction(-1, 2)
    assert p.coefficient(()) == 3
    assert parse_polynomial(p.format(A2), A2) == p


def test_bracket_syntax_expands():
    assert parse_polynomial("[x2 x1]", A2) == FreePolynomial({(1, 0): 1, (0, 1): -1})
    assert parse_polynomial("[[x2 x1] x1]", A2).degree() == 3


@pytest.mark.parametrize("text", ["x1 +", "x1 x9", "[x1", "x1 ^ x2", ""])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_polynomial(text, A2)


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        FreePolynomial({(0,): 0.5})


def test_leading_word_and_zero():
    p = parse_polynomial("x1 x2 + x2 x1 + x1 x1 x1", A2)
    assert leading(p, DegLex(A2)) == ((0, 0, 0), 1)
    with pytest.raises(ZeroPolynomialError):
        leading(FreePolynomial.zero(), DegLex(A2))


def test_reduction_examples():
    o = DegLex(A2)
    s = [parse_polynomial("x2 x1 - x1 x2", A2)]
    assert normal_form(parse_polynomial("x2 x2 x1", A2), s, o) == FreePolynomial.word((0, 1, 1))
    assert normal_form(parse_polynomial("x1 x2", A2), s, o) == FreePolynomial.word((0, 1))
    assert normal_form(parse_polynomial("x2 x1", A2), [], o) == FreePolynomial.word((1, 0))


def test_non_monic_rejected():
    with pytest.raises(NonMonicError):
        Reducer([parse_polynomial("2 x2 x1 - x1", A2)], DegLex(A2))


def test_non_monomial_order_rejected():
    with pytest.raises(ValueError):
        Reducer([parse_polynomial("x2 x1", A2)], ShirshovLex(A2))


RELS = [parse_polynomial(t, A3) for t in ("x2 x1 - x1 x2", "x3 x3 - x1", "x3 x2 x1 - x2 x2")]


@st.composite
def polys(draw):
    terms = draw(st.lists(st.tuples(words3, st.integers(-3, 3)), max_size=5))
    return FreePolynomial(terms)


@settings(max_examples=150, deadline=None)
@given(polys())
def test_reduction_trace_reconstructs(f):
    red = reduce_with_trace(f, RELS, DegLex(A3))
    assert f - red.remainder == red.reconstruct(RELS)
    reducer = Reducer(RELS, DegLex(A3))
    assert all(reducer.is_irreducible(w) for w in red.remainder)


@settings(max_examples=100, deadline=None)
@given(polys())
def test_normal_form_idempotent(f):
    o = DegLex(A3)
    r = normal_form(f, RELS, o)
    assert normal_form(r, RELS, o) == r
