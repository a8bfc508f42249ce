import pytest
from hypothesis import given
from hypothesis import strategies as st

from crossrat.errors import CycleParseError
from crossrat.perm import Permutation, compose, format_cycles, parse_cycles

from conftest import permutations


@pytest.mark.parametrize(
    "text, n, images",
    [
        ("(1 2)(3 4)", 5, (2, 1, 4, 3, 5)),
        ("()", 3, (1, 2, 3)),
        ("", 3, (1, 2, 3)),
        ("(1 2 3)", 3, (2, 3, 1)),
        ("  ( 1   2 3 ) ", 3, (2, 3, 1)),
        ("(4)", 4, (1, 2, 3, 4)),
    ],
)
def test_parse_cycles(text, n, images):
    assert parse_cycles(text, n).images == images


def test_overlapping_cycles_apply_right_first():
    # (1 2)(2 3): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    assert parse_cycles("(1 2)(2 3)", 3).images == (2, 3, 1)


@pytest.mark.parametrize(
    "text, token",
    [
        ("(1 6)", "6"),
        ("(0 1)", "0"),
        ("(1 2 1)", "1"),
        ("(1 2", "("),
        ("1 2)", "1"),
        ("(1 2))", ")"),
        ("((1 2))", "("),
        ("(1 a)", "a"),
        ("(1,2)", ","),
    ],
)
def test_parse_errors_name_the_token(text, token):
    with pytest.raises(CycleParseError) as info:
        parse_cycles(text, 5)
    assert info.value.token == token


def test_compose_hand_table():
    p = parse_cycles("(1 2)", 3)  # [2, 1, 3]
    q = parse_cycles("(2 3)", 3)  # [1, 3, 2]
    assert compose(p, q).images == (2, 3, 1)
    assert compose(q, p).images == (3, 1, 2)
    assert (p * q)(1) == p(q(1))


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_invalid_image_tables():
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        Permutation([])


def test_cycles_order_sign():
    p = parse_cycles("(1 2 3)(4 5)", 6)
    assert p.cycles() == [(1, 2, 3), (4, 5)]
    assert p.order() == 6
    assert p.sign() == -1
    assert p.support() == [1, 2, 3, 4, 5]
    assert (p ** 6).is_identity()
    assert p ** -1 == p.inverse()
    assert format_cycles(Permutation.identity(4)) == "()"


@given(st.integers(1, 9).flatmap(lambda n: st.tuples(permutations(n), permutations(n), permutations(n))))
def test_group_laws(triple):
    p, q, r = triple
    e = Permutation.identity(p.degree)
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert compose(p, e) == p == compose(e, p)
    assert compose(p, p.inverse()) == e == compose(p.inverse(), p)


@given(st.integers(1, 12).flatmap(permutations))
def test_format_parse_round_trip(p):
    assert parse_cycles(format_cycles(p), p.degree).images == p.images
