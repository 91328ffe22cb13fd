import itertools
import random

import pytest

from shirshov.errors import InternalContradictionError
from shirshov.plactic import (COLUMN, ROW, column_from_word, column_word, content, dominates,
                              format_letters, normalize_factors, plactic_column_product,
                              plactic_row_product, row_from_word, row_word, tableau_normal_form,
                              tableau_strings, tableau_word)

from oracles import schensted, tableau_columns, tableau_rows_reading


def test_row_and_column_encoding():
    assert row_from_word((0, 0, 0, 1, 1, 4), 6) == (3, 2, 0, 0, 1, 0)
    assert column_from_word((5, 3, 1, 0), 7) == (1, 1, 0, 1, 0, 1, 0)
    assert row_word((3, 2, 0, 0, 1)) == (0, 0, 0, 1, 1, 4)
    assert column_word((1, 1, 0, 1, 0, 1)) == (5, 3, 1, 0)
    with pytest.raises(ValueError):
        row_from_word((1, 0), 2)
    with pytest.raises(ValueError):
        column_from_word((0, 1), 2)


def test_format_letters():
    assert format_letters((0, 1, 1), 3) == "122"
    assert format_letters((0, 10), 11) == "1 11"


def test_row_product_examples():
    # 2 * 1: bumped row 2 over row 1
    assert plactic_row_product((0, 1), (1, 0)) == ((0, 1), (1, 0))
    # 1 * 2 = row 12
    assert plactic_row_product((1, 0), (0, 1)) == ((0, 0), (1, 1))


def test_column_product_examples():
    assert plactic_column_product((0, 1), (1, 0)) == ((1, 1), (0, 0))
    assert plactic_column_product((1, 0), (0, 1)) == ((1, 0), (0, 1))
    with pytest.raises(ValueError):
        plactic_column_product((1, 0), (1,))


def test_tableau_examples():
    assert tableau_strings(tableau_normal_form((2, 1, 0, 1), 3)) == ["3", "2", "12"]
    assert tableau_strings(tableau_normal_form((2, 1, 0, 1), 3, COLUMN), COLUMN) == ["321", "2"]
    assert tableau_normal_form((), 3) == []
    with pytest.raises(ValueError):
        tableau_normal_form((3,), 3)
    with pytest.raises(ValueError):
        tableau_normal_form((0,), 3, "diagonal")


@pytest.mark.parametrize("mode", [ROW, COLUMN])
def test_normal_form_matches_schensted(mode):
    oracle = tableau_rows_reading if mode == ROW else tableau_columns
    enc = row_from_word if mode == ROW else column_from_word
    for length in range(6):
        for w in itertools.product(range(3), repeat=length):
            got = tableau_normal_form(w, 3, mode)
            assert got == [enc(f, 3) for f in oracle(w)]


def test_rows_are_dominated_in_order():
    rng = random.Random(4)
    for _ in range(200):
        w = tuple(rng.randrange(4) for _ in range(rng.randrange(10)))
        rows = tableau_normal_form(w, 4)
        assert all(dominates(a, b) for a, b in zip(rows, rows[1:]))
        assert content(rows) == (tuple(w.count(i) for i in range(4)) if w else ())


def test_reading_word_is_a_fixed_point():
    rng = random.Random(6)
    for _ in range(100):
        w = tuple(rng.randrange(3) for _ in range(rng.randrange(8)))
        for mode in (ROW, COLUMN):
            fs = tableau_normal_form(w, 3, mode)
            assert tableau_normal_form(tableau_word(fs, mode), 3, mode) == fs


def test_normalize_drops_empty_factors():
    assert normalize_factors([(0, 0), (1, 0), (0, 0)], ROW) == [(1, 0)]


def test_column_product_guard():
    with pytest.raises(InternalContradictionError):
        plactic_column_product((2, 0), (0, 1))


def test_schensted_oracle_sanity():
    assert schensted((2, 1, 0, 1)) == [[0, 1], [1], [2]]
