import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from glrep.matrices import (
    NotNilpotent,
    RationalMatrix,
    dominance_oracle,
    elementary,
    jordan_matrix,
    jordan_power_rank,
    partition_of_nilpotent,
    power_ranks,
    project_mirabolic,
    random_invertible,
    rank,
    trace_form,
    verify_projection_injectivity,
)
from glrep.partitions import SizeMismatch, as_partition, compositions, dominates, partitions

small_fraction = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrix_st(rows, cols):
    return st.lists(st.lists(small_fraction, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def naive_rank(rows):
    """Plain Gaussian elimination over Fractions, for cross-checking."""
    m = [list(map(Fraction, r)) for r in rows]
    r = 0
    for c in range(len(m[0]) if m else 0):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


@settings(max_examples=200)
@given(st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(lambda c: matrix_st(r, c))))
def test_bareiss_rank_matches_naive(rows):
    assert rank(rows) == naive_rank(rows)


@pytest.mark.parametrize(
    "alpha, ones",
    [((2,), [(0, 1)]), ((1, 1), []), ((2, 1), [(0, 1)]), ((1, 2), [(1, 2)]), ((3,), [(0, 1), (1, 2)])],
)
def test_jordan_matrix(alpha, ones):
    j = jordan_matrix(alpha)
    n = sum(alpha)
    assert j.tolist() == [[1 if (i, k) in ones else 0 for k in range(n)] for i in range(n)]
    assert (j ** max(alpha)).is_zero()


@pytest.mark.parametrize("n", range(1, 8))
def test_partition_of_jordan_is_reordering(n):
    for alpha in compositions(n):
        assert partition_of_nilpotent(jordan_matrix(alpha)) == as_partition(alpha)


def test_partition_of_zero_and_conjugates():
    assert partition_of_nilpotent(RationalMatrix.zero(4)) == (1, 1, 1, 1)
    rng = random.Random(7)
    for lam in [(3, 1), (2, 2, 1), (4,), (2, 1, 1)]:
        g = random_invertible(sum(lam), rng)
        x = g @ jordan_matrix(lam) @ g.inverse()
        assert partition_of_nilpotent(x) == lam


def test_partition_rejects_non_nilpotent():
    with pytest.raises(NotNilpotent):
        partition_of_nilpotent(RationalMatrix.identity(2))


@pytest.mark.parametrize("n", range(1, 8))
def test_power_ranks_closed_form(n):
    for lam in partitions(n):
        ranks = power_ranks(jordan_matrix(lam))
        for k in range(n + 1):
            assert ranks[k] == jordan_power_rank(lam, k)


@pytest.mark.parametrize("lam, mu, expected", [((3, 1), (2, 2), True), ((2, 2), (3, 1), False), ((2, 2), (2, 2), True)])
def test_dominance_oracle_examples(lam, mu, expected):
    assert dominance_oracle(lam, mu) is expected


@pytest.mark.parametrize("n", range(1, 8))
def test_dominance_oracle_agrees(n):
    parts = list(partitions(n))
    for lam, mu in product(parts, repeat=2):
        assert dominance_oracle(lam, mu) == dominates(lam, mu)


def test_dominance_oracle_size_mismatch():
    with pytest.raises(SizeMismatch):
        dominance_oracle((2,), (1,))


def test_trace_form_examples():
    assert trace_form(RationalMatrix.identity(3), RationalMatrix.identity(3)) == 3
    assert trace_form(jordan_matrix((2,)), jordan_matrix((2,))) == 0
    with pytest.raises(ValueError):
        trace_form(RationalMatrix.identity(2), RationalMatrix.identity(3))


def test_trace_form_conjugation_invariance():
    rng = random.Random(11)
    for _ in range(10):
        n = rng.randint(2, 4)
        x = RationalMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        y = RationalMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        g = random_invertible(n, rng)
        gi = g.inverse()
        assert trace_form(g @ x @ gi, g @ y @ gi) == trace_form(x, y)
        assert trace_form(x, y) == trace_form(y, x)


@pytest.mark.parametrize("n", range(1, 6))
def test_trace_form_gram_is_permutation(n):
    basis = [elementary(n, i, j) for i in range(n) for j in range(n)]
    gram = [[trace_form(a, b) for b in basis] for a in basis]
    for row in gram:
        assert sorted(row) == [0] * (len(row) - 1) + [1]
    for col in zip(*gram):
        assert sorted(col) == [0] * (len(col) - 1) + [1]


def test_matrix_arithmetic_and_json():
    a = RationalMatrix([[1, Fraction(1, 2)], [0, -3]])
    assert a @ a.inverse() == RationalMatrix.identity(2)
    assert a ** 0 == RationalMatrix.identity(2)
    assert (a - a).is_zero()
    assert a.to_json() == [["1", "1/2"], ["0", "-3"]]
    assert RationalMatrix.from_json(a.to_json()) == a


def test_project_mirabolic_zeroes_last_column():
    a = RationalMatrix([[1, 2], [3, 4]])
    assert project_mirabolic(a).tolist() == [[1, 0], [3, 0]]


@pytest.mark.parametrize("lam", [(2,), (3, 1), (1, 1, 1), (2, 2)])
def test_projection_injectivity_no_violations(lam):
    report = verify_projection_injectivity(lam, trials=100, seed=3)
    assert report.violations == 0
    assert report.trace_failures == 0
    assert report.trace_checks == report.pairs > 0
    assert report.to_json()["seed"] == 3


def test_projection_injectivity_is_seeded():
    a = verify_projection_injectivity((2, 1), trials=30, seed=5).to_json()
    b = verify_projection_injectivity((2, 1), trials=30, seed=5).to_json()
    assert a == b


def test_projection_report_merge():
    a = verify_projection_injectivity((2,), trials=10, seed=1)
    b = verify_projection_injectivity((2,), trials=15, seed=2)
    merged = a.merge(b)
    assert merged.trials == 25 and merged.u_hits == a.u_hits + b.u_hits
