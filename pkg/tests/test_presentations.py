import itertools
import json

import pytest

from shirshov.commutative import CommutativePolynomial
from shirshov.engine import check_gs_basis, shirshov_complete
from shirshov.errors import ParseError
from shirshov.lyndon import LieElement
from shirshov.presentations import (Presentation, WordProblemResult, braid_b3, chinese_normal_form,
                                    chinese_relation_pairs, chinese_relations, clifford_relations,
                                    fixture_names, grassmann_relations, is_lambda_form,
                                    knuth_relation_pairs, knuth_relations, load_fixture,
                                    load_presentation, make_presentation, presentation_from_json,
                                    presentation_to_json, semigroup_to_algebra, word_problem)
from shirshov.words import DegLex

from oracles import chinese_pairs, congruence_classes, knuth_pairs


def test_every_fixture_loads_and_roundtrips():
    for name in fixture_names():
        p = load_fixture(name)
        assert isinstance(p, Presentation)
        again = presentation_from_json(presentation_to_json(p), name)
        assert again.relations == p.relations
        assert again.alphabet == p.alphabet


def test_fixture_kinds():
    assert isinstance(load_fixture("pbw_3dim").relations[0], LieElement)
    assert isinstance(load_fixture("eps_lift_demo").relations[0], CommutativePolynomial)
    assert load_fixture("braid_b3").kind == "semigroup"


def test_unknown_fixture_and_bad_json(tmp_path):
    with pytest.raises(ParseError):
        load_fixture("nope")
    bad = tmp_path / "bad.json"
    bad.write_text('{"generators": ["x1",]}')
    with pytest.raises(ParseError) as e:
        load_presentation(str(bad))
    assert "line 1" in str(e.value)
    with pytest.raises(ParseError):
        load_presentation(str(tmp_path / "missing.json"))


def test_json_validation():
    with pytest.raises(ParseError):
        presentation_from_json({"kind": "algebra"})
    with pytest.raises(ParseError):
        presentation_from_json({"generators": ["a"], "kind": "ring"})
    with pytest.raises(ParseError):
        presentation_from_json({"generators": ["a"], "relations": [{"lhs": "a +"}]})
    with pytest.raises(ParseError):
        presentation_from_json({"generators": ["a", "b"], "order": {"type": "deglex", "precedence": ["a"]}})


def test_precedence_reorders_generators():
    p = presentation_from_json({"generators": ["a", "b"], "order": {"type": "deglex", "precedence": ["b", "a"]},
                                "relations": [{"lhs": "a b", "rhs": "b a"}]})
    assert p.alphabet.generators == ("b", "a")
    # a > b now, so the leading word is a b
    assert max(p.relations[0].terms, key=p.order.key) == (1, 0)


def test_trivial_relation_warns():
    with pytest.warns(UserWarning):
        rels = semigroup_to_algebra([((0,), (0,)), ((1, 0), (0, 1))], DegLex(grassmann_relations(2).alphabet))
    assert len(rels) == 1


def test_group_of_one_generator():
    p = make_presentation(["x"], "group", [])
    assert p.alphabet.generators == ("x", "x^-1")
    assert word_problem(p, (0, 1, 0), (0,)).result == WordProblemResult.EQUAL
    assert word_problem(p, (0, 0), (1,)).result == WordProblemResult.NOT_EQUAL


def test_family_counts():
    assert len(chinese_relation_pairs(3)) == 9
    assert len(chinese_relation_pairs(4)) == 24
    assert len(chinese_relations(2).relations) == 2
    assert chinese_relations(1).relations == []
    assert len(knuth_relations(3).relations) == 8
    assert sorted(knuth_relation_pairs(3)) == sorted(knuth_pairs(3))


def test_knuth_three_is_not_closed():
    p = knuth_relations(3)
    assert not check_gs_basis(p.relations, p.order).verdict


def test_chinese_normal_forms_small():
    assert chinese_normal_form((2, 0, 1), 3) == (1, 2, 0)
    assert is_lambda_form((1, 2, 0), 3)
    assert is_lambda_form((0, 1), 3)


def test_lambda_predicate_examples():
    # A* (BA)* B* (CA)* (CB)* C*
    assert is_lambda_form((0, 0, 1, 0, 1, 2, 0, 2, 1, 2), 3)
    assert not is_lambda_form((1, 0, 0), 3)
    assert not is_lambda_form((2, 1, 0), 3)


def test_chinese_basis_matches_defining_relations_n3():
    n = 3
    for length in range(1, 5):
        classes, _ = congruence_classes(chinese_pairs(n), n, length)
        nfs = {chinese_normal_form(w, n) for w in itertools.product(range(n), repeat=length)}
        assert len(nfs) == len(classes)


def test_clifford_and_grassmann_are_closed():
    c = clifford_relations([[1, 0], [0, -1]])
    assert check_gs_basis(c.relations, c.order).verdict
    g = grassmann_relations(4)
    assert check_gs_basis(g.relations, g.order).verdict


def test_word_problem_examples():
    c = chinese_relations(3)
    assert word_problem(c, (2, 0, 1), (1, 2, 0)).result == WordProblemResult.EQUAL
    assert word_problem(c, (0, 1), (1, 0)).result == WordProblemResult.NOT_EQUAL
    b = braid_b3()
    assert word_problem(b, (1, 0, 1), (0, 1, 0)).result == WordProblemResult.EQUAL


def test_word_problem_unknown_beyond_radius():
    b = braid_b3()
    done = shirshov_complete(b.relations, b.order, max_degree=5)
    ans = word_problem(b, (1, 0, 1, 1), (1, 1, 0, 1), completion=done)
    assert ans.result == WordProblemResult.UNKNOWN


def test_word_problem_rejects_lie():
    with pytest.raises(ValueError):
        word_problem(load_fixture("pbw_2dim"), (0,), (1,))


def test_to_json_is_serializable():
    for name in fixture_names():
        json.dumps(presentation_to_json(load_fixture(name)))
