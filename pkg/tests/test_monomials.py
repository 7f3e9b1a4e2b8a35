import math
import random

import pytest

from stablebetti import (
    BadRange,
    DegreeMismatch,
    InvalidMove,
    MonomialSyntaxError,
    borel_move,
    degree,
    format_monomial,
    lex_compare,
    max_index,
    parse_monomial,
)
from stablebetti.monomials import (
    borel_moves,
    count_degree,
    divides,
    enumerate_degree,
    iter_degree,
    mul_var,
    multiply,
    support,
    unit,
    variable,
)


def test_unit_and_variable():
    assert unit(3) == (0, 0, 0)
    assert variable(4, 2) == (0, 1, 0, 0)
    assert degree(unit(5)) == 0
    assert max_index(unit(5)) == 0
    with pytest.raises(BadRange):
        variable(3, 4)
    with pytest.raises(BadRange):
        variable(3, 0)


def test_degree_support_max_index():
    u = (2, 0, 3, 1)
    assert degree(u) == 6
    assert support(u) == (1, 3, 4)
    assert max_index(u) == 4


def test_multiply_and_divides():
    u, v = (1, 2, 0), (0, 1, 3)
    assert multiply(u, v) == (1, 3, 3)
    assert divides((0, 1, 0), (1, 2, 0))
    assert not divides((0, 0, 1), (1, 2, 0))
    assert mul_var((1, 0, 0), 3, 2) == (1, 0, 2)


def test_parse_format_round_trip():
    cases = ["1", "x1", "x3^4", "x1^2*x2", "x2*x3^8"]
    for text in cases:
        u = parse_monomial(text, 4)
        assert format_monomial(u) == text
    assert parse_monomial("x2^3*x1", 3) == (1, 3, 0)


def test_parse_rejects_garbage():
    for bad in ["", "x0", "x4", "x1^0", "x1^-2", "y1", "x1**2", "x1*", "2*x1"]:
        with pytest.raises(MonomialSyntaxError):
            parse_monomial(bad, 3)


def test_lex_compare_fixed_points():
    n = 3
    a = parse_monomial("x1^2", n)
    b = parse_monomial("x1*x2", n)
    c = parse_monomial("x2^2", n)
    assert lex_compare(a, b) == 1
    assert lex_compare(b, c) == 1
    assert lex_compare(c, c) == 0
    assert lex_compare(b, a) == -1


def test_lex_compare_needs_equal_degrees():
    with pytest.raises(DegreeMismatch):
        lex_compare((1, 0), (2, 0))


def test_iter_degree_is_lex_descending_and_complete():
    for n in (1, 2, 3, 4):
        for d in (1, 2, 3):
            listed = list(iter_degree(n, d))
            assert len(listed) == count_degree(n, d) == math.comb(n + d - 1, d)
            assert listed == enumerate_degree(n, d)
            for u, v in zip(listed, listed[1:]):
                assert lex_compare(u, v) == 1


def test_borel_move_lowers_index():
    u = parse_monomial("x2*x3^2", 3)
    assert borel_move(u, 3, 1) == parse_monomial("x1*x2*x3", 3)
    assert borel_move(u, 2, 1) == parse_monomial("x1*x3^2", 3)
    with pytest.raises(InvalidMove):
        borel_move(u, 1, 2)  # j must be smaller than i
    with pytest.raises(InvalidMove):
        borel_move(u, 1, 1)
    with pytest.raises(InvalidMove):
        borel_move(parse_monomial("x2^2", 3), 3, 1)  # x3 does not divide


def test_borel_moves_enumerates_all_single_steps():
    u = parse_monomial("x2*x3", 3)
    assert set(borel_moves(u)) == {
        parse_monomial("x1*x3", 3),
        parse_monomial("x1*x2", 3),
        parse_monomial("x2^2", 3),
    }
    assert borel_moves(unit(3)) == []


def test_borel_move_preserves_degree_randomized():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(2, 5)
        u = tuple(rng.randint(0, 3) for _ in range(n))
        if max_index(u) < 2:
            continue
        i = max_index(u)
        j = rng.randint(1, i - 1)
        v = borel_move(u, i, j)
        assert degree(v) == degree(u)
        assert lex_compare(v, u) == 1  # moves always raise lex order
