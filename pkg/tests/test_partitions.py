from itertools import product

import pytest
from hypothesis import given, strategies as st

from glrep.partitions import (
    Composition,
    ParseError,
    Partition,
    SizeMismatch,
    compositions,
    dominates,
    format_exponential,
    orbit_sum,
    parse_exponential,
    parse_partition_arg,
    partitions,
    reorder,
    transpose,
)

partition_st = st.lists(st.integers(1, 8), max_size=8).map(lambda xs: Partition(sorted(xs, reverse=True)))


@pytest.mark.parametrize(
    "alpha, direction, expected",
    [
        ((1, 3, 2), "nonincreasing", (3, 2, 1)),
        ((2, 2), "nonincreasing", (2, 2)),
        ((2, 2), "nondecreasing", (2, 2)),
        ((1, 4, 1, 2), "nonincreasing", (4, 2, 1, 1)),
        ((1, 4, 1, 2), "nondecreasing", (1, 1, 2, 4)),
    ],
)
def test_reorder(alpha, direction, expected):
    assert tuple(reorder(alpha, direction)) == expected


def test_reorder_rejects_unknown_direction():
    with pytest.raises(ValueError):
        reorder((1, 2), "sideways")


@pytest.mark.parametrize(
    "lam, expected",
    [((4, 4, 2, 1, 1, 1), (6, 3, 2, 2)), ((5,), (1, 1, 1, 1, 1)), ((), ())],
)
def test_transpose(lam, expected):
    assert transpose(lam) == expected


def test_transpose_is_an_involution():
    for n in range(31):
        for lam in partitions(n):
            assert transpose(transpose(lam)) == lam


@pytest.mark.parametrize(
    "lam, mu, expected",
    [((3, 1), (2, 2), (5, 3)), ((4, 2), (), (4, 2)), ((1, 1, 1), (1,), (2, 1, 1))],
)
def test_orbit_sum(lam, mu, expected):
    assert orbit_sum(lam, mu) == expected


def test_orbit_sum_laws_exhaustive():
    parts = [p for n in range(9) for p in partitions(n)]
    for lam, mu in product(parts, repeat=2):
        s = orbit_sum(lam, mu)
        assert s == orbit_sum(mu, lam)
        assert s.n == lam.n + mu.n
        assert transpose(s) == tuple(sorted(transpose(lam) + transpose(mu), reverse=True))


@given(partition_st, partition_st, partition_st)
def test_orbit_sum_associative(a, b, c):
    assert orbit_sum(orbit_sum(a, b), c) == orbit_sum(a, orbit_sum(b, c))


@pytest.mark.parametrize(
    "lam, mu, expected", [((3, 1), (2, 2), True), ((2, 2), (3, 1), False), ((2, 2), (2, 2), True)]
)
def test_dominates(lam, mu, expected):
    assert dominates(lam, mu) is expected


def test_dominates_size_mismatch():
    with pytest.raises(SizeMismatch):
        dominates((2, 1), (2,))


@pytest.mark.parametrize("n", range(1, 11))
def test_dominance_is_a_partial_order(n):
    parts = list(partitions(n))
    for a in parts:
        assert dominates(a, a)
        for b in parts:
            if a != b and dominates(a, b):
                assert not dominates(b, a)
            for c in parts:
                if dominates(a, b) and dominates(b, c):
                    assert dominates(a, c)


@pytest.mark.parametrize(
    "text, expected", [("4^2 2 1^3", (4, 4, 2, 1, 1, 1)), ("3", (3,)), ("2 ^ 2", (2, 2)), ("1^2 3", (1, 1, 3))]
)
def test_parse_exponential(text, expected):
    assert parse_exponential(text) == expected


@pytest.mark.parametrize("text", ["2^0", "", "a", "3^", "2^2x"])
def test_parse_exponential_errors(text):
    with pytest.raises(ParseError) as e:
        parse_exponential(text)
    assert e.value.position >= 0


def test_format_exponential():
    assert format_exponential((4, 4, 2, 1, 1, 1)) == "4^2 2 1^3"


@given(partition_st.filter(bool))
def test_exponential_round_trip(lam):
    assert parse_exponential(format_exponential(lam)) == lam


@pytest.mark.parametrize(
    "text, expected", [("2,2", (2, 2)), ("(3,1)", (3, 1)), ("2^2", (2, 2)), ("()", ()), ("1,3", (1, 3))]
)
def test_parse_partition_arg(text, expected):
    assert parse_partition_arg(text) == expected


def test_parse_partition_arg_bad_part():
    with pytest.raises(ParseError) as e:
        parse_partition_arg("2,0")
    assert e.value.position == 2


def test_types_validate():
    with pytest.raises(ValueError):
        Composition((1, 0))
    with pytest.raises(ValueError):
        Partition((1, 2))
    assert Composition((1, 2)).n == 3


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (5, 7), (10, 42), (20, 627)])
def test_partition_counts(n, count):
    assert sum(1 for _ in partitions(n)) == count


def test_compositions():
    assert sum(1 for _ in compositions(6)) == 2**5
    assert all(c.n == 6 for c in compositions(6))
