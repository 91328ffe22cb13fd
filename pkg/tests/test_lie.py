import random
from fractions import Fraction

import pytest

from shirshov.engine import INCLUSION, INTERSECTION, Ambiguity, all_ambiguities, composition
from shirshov.errors import NonMonicError, NotALieElementError
from shirshov.lie import (as_lie, check_lie_gs_basis, lie_composition, lie_irr, lie_normal_form,
                          lie_reduce, pbw_shirshov_check, special_normal_word)
from shirshov.lyndon import LieElement, Leaf, Node, expand, nlsw_enumerate
from shirshov.poly import FreePolynomial, parse_polynomial
from shirshov.presentations import drinfeld_kohno, load_fixture
from shirshov.words import Alphabet, DegLex

from oracles import lie_quotient_dims, witt

A2 = Alphabet.standard(2)
A3 = Alphabet.standard(3)


def L(text, a=A2):
    return as_lie(parse_polynomial(text, a))


def test_as_lie():
    assert L("[x2 x1]") == LieElement.basis((1, 0))
    with pytest.raises(NotALieElementError):
        L("x2 x1")
    with pytest.raises(TypeError):
        as_lie("x1")


def test_normal_form_examples():
    s = [L("[x2 x1] - x1")]
    assert lie_normal_form(L("[[x2 x1] x1]"), s) == LieElement()
    assert lie_normal_form(L("[x2 x1]"), s) == L("x1")
    assert lie_normal_form(L("[x2 [x2 x1]]"), s) == L("x1")
    assert lie_normal_form(L("x2"), s) == L("x2")


def test_reduction_steps_recorded():
    red = lie_reduce(L("[x2 [x2 x1]]"), [L("[x2 x1] - x1")])
    assert len(red.steps) == 2
    assert red.remainder == L("x1")


def test_normal_form_support_avoids_leading_words():
    s = [as_lie(parse_polynomial(t, A2)) for t in ("[x2 [x2 x1]]", "[[x2 x1] x1] - [x2 x1]")]
    rng = random.Random(2)
    basis = nlsw_enumerate(2, 6)
    for _ in range(40):
        f = LieElement({t.word: rng.randrange(-3, 4) for t in rng.sample(basis, 4)})
        r = lie_normal_form(f, s)
        for w in r.coeffs:
            assert (1, 1, 0) not in [w[i:i + 3] for i in range(len(w))]
            assert (1, 0, 0) not in [w[i:i + 3] for i in range(len(w))]


def test_non_monic_rejected():
    with pytest.raises(NonMonicError):
        lie_normal_form(L("x1"), [L("[x2 x1]").scale(2)])


def test_special_normal_word_leading_word():
    s = L("[x2 x1] - x1")
    w = (1, 1, 0, 0, 1, 0, 0, 0)
    p = special_normal_word(s, w, 1)
    assert max(p.terms, key=DegLex(A2).key) == w


def test_pbw_two_dim_is_gs():
    p = load_fixture("pbw_2dim")
    assert check_lie_gs_basis(p.relations, p.order).verdict


def test_single_relation_is_gs():
    assert check_lie_gs_basis([L("[x2 x1] - x1")]).verdict
    assert check_lie_gs_basis([L("[x2 [x2 x1]]")]).verdict


def test_lie_composition_matches_associative_recognition():
    s = [L("[x2 [x2 x1]]"), L("[[x2 x1] x1]")]
    order = DegLex(A2)
    assoc = [x.expand() for x in s]
    for amb in all_ambiguities(assoc, order):
        h = lie_composition(s[amb.i], s[amb.j], amb)
        assoc_h = composition(assoc[amb.i], assoc[amb.j], amb)
        # both lie in the ideal and lose the ambiguity word
        assert amb.w not in h.expand().terms
        assert amb.w not in assoc_h.terms


def test_lie_composition_rejects_bad_ambiguity():
    f = L("[x2 x1]")
    with pytest.raises(ValueError):
        lie_composition(f, f, Ambiguity(INCLUSION, (1, 0, 0), (), (0,), 0, 0))
    with pytest.raises(ValueError):
        lie_composition(f, f, Ambiguity(INTERSECTION, (1, 0), (), (), 0, 0))
    with pytest.raises(ValueError):
        lie_composition(f, f, Ambiguity("other", (1, 0), (), (), 0, 0))


def test_pbw_check_agrees_on_fixtures():
    for name in ("pbw_2dim", "pbw_3dim", "drinfeld_kohno_n4"):
        p = load_fixture(name)
        res = pbw_shirshov_check(p.relations, p.order)
        assert res.agree and res.lie and res.assoc


def test_pbw_check_agrees_on_failing_set():
    s = [L("[x3 x2] - x1", A3), L("[x2 x1] - x3", A3)]
    res = pbw_shirshov_check(s)
    assert res.agree
    assert not res.lie


def test_lie_irr_two_dim():
    p = load_fixture("pbw_2dim")
    words = [t.word for t in lie_irr(p.relations, 2, 4)]
    assert words == [(0,), (1,)]


def test_drinfeld_kohno_dims_against_oracles():
    p = drinfeld_kohno(4)
    assert check_lie_gs_basis(p.relations, p.order).verdict
    counts = [0] * 5
    for t in lie_irr(p.relations, p.alphabet, 4):
        counts[t.degree] += 1
    oracle = lie_quotient_dims([s.expand().terms for s in p.relations], 3, 4)
    assert counts[1:] == oracle
    layered = [witt(2, d) + witt(1, d) for d in range(1, 5)]
    assert oracle == layered


def _random_tree(rng, n, leaves):
    if leaves == 1:
        return Leaf(rng.randrange(n))
    k = rng.randrange(1, leaves)
    return Node(_random_tree(rng, n, k), _random_tree(rng, n, leaves - k))


def test_ideal_elements_reduce_to_zero():
    s = [L("[x2 x1] - x1")]
    rng = random.Random(11)
    for _ in range(30):
        # iterated commutators [..[s, y1].., yk] lie in the Lie ideal
        e = s[0].expand()
        for _ in range(rng.randrange(3)):
            y = expand(_random_tree(rng, 2, rng.randrange(1, 3)))
            e = e * y - y * e
        e = e.scale(Fraction(rng.randrange(1, 5)))
        assert lie_normal_form(as_lie(e), s) == LieElement()


def test_zero_input():
    assert lie_normal_form(LieElement(), [L("[x2 x1]")]) == LieElement()
    assert lie_normal_form(FreePolynomial.zero(), []) == LieElement()
