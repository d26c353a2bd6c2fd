import random

import pytest
from hypothesis import given, settings, strategies as st

from glrep.partitions import compositions, dominates, reorder
from glrep.zelevinsky import (
    NotHomogeneous,
    PolyParseError,
    SegmentPoly,
    derivative_word,
    depth_composition_padic,
    graded_derivative,
    highest_derivative,
    monomial,
    monomials,
    parse_poly,
    random_poly,
    random_segment_pool,
    seg,
    total_derivative,
    wf_partition,
)

D2 = seg("a", 1, 0, 2)
x = SegmentPoly.of(D2)
y = SegmentPoly.of(D2.minus())


segment_st = st.builds(seg, st.sampled_from("ab"), st.integers(1, 3), st.integers(-1, 1), st.integers(1, 3))
monomial_st = st.lists(segment_st, min_size=1, max_size=3).map(monomial)
poly_st = st.dictionaries(st.lists(segment_st, max_size=3).map(monomial), st.integers(-9, 9), max_size=4).map(SegmentPoly)


def test_segment_basics():
    d = seg("r", 2, 1, 3)
    assert d.size == 6
    assert d.minus() == seg("r", 2, 1, 2)
    assert seg("r", 2, 1, 1).minus() is None
    with pytest.raises(ValueError):
        seg("r", 0, 0, 1)


def test_ring_laws():
    a, b = SegmentPoly.of(seg("a", 1, 0, 2)), SegmentPoly.of(seg("b", 2, 0, 1))
    assert a * 1 == a
    assert (a + b) ** 2 == a * a + 2 * a * b + b * b
    assert (a - a) == SegmentPoly() and not (a - a).terms
    assert (a * b).sizes() == {4}


@settings(max_examples=100, deadline=None)
@given(poly_st, poly_st, poly_st)
def test_ring_axioms_random(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


def test_total_derivative_examples():
    single = SegmentPoly.of(seg("a", 3, 0, 1))
    assert total_derivative(single) == single + 1
    assert total_derivative(x * x) == x * x + 2 * x * y + y * y
    assert total_derivative(SegmentPoly.const(1)) == SegmentPoly.const(1)


def test_graded_derivative_examples():
    assert graded_derivative(x, 1) == y
    assert graded_derivative(x, 2) == SegmentPoly()
    assert graded_derivative(x * x, 2) == y * y
    assert graded_derivative(x * x, 0) == x * x
    with pytest.raises(NotHomogeneous):
        graded_derivative(x + y, 1)
    with pytest.raises(ValueError):
        graded_derivative(x, 3)


@settings(max_examples=100, deadline=None)
@given(monomial_st, st.integers(1, 5))
def test_graded_components_sum_to_total(mono, c):
    p = SegmentPoly.of(mono) * c
    n = next(iter(p.sizes()))
    total = SegmentPoly()
    for k in range(n + 1):
        total = total + graded_derivative(p, k)
    assert total == total_derivative(p)


@settings(max_examples=60, deadline=None)
@given(monomial_st, monomial_st)
def test_leibniz_by_grading(a, b):
    p, q = SegmentPoly.of(a), SegmentPoly.of(b)
    n, m = next(iter(p.sizes())), next(iter(q.sizes()))
    for k in range(n + m + 1):
        rhs = SegmentPoly()
        for i in range(max(0, k - m), min(k, n) + 1):
            rhs = rhs + graded_derivative(p, i) * graded_derivative(q, k - i)
        assert graded_derivative(p * q, k) == rhs


@pytest.mark.parametrize(
    "poly, alpha, value",
    [
        (SegmentPoly.of(seg("a", 1, 0, 3)), (1, 1, 1), 1),
        (x * x, (2, 2), 1),
        (x * x, (2, 1, 1), 2),
        (x * x, (3, 1), 0),
        (SegmentPoly.of(seg("c", 3, 0, 1)), (3,), 1),
    ],
)
def test_derivative_word(poly, alpha, value):
    assert derivative_word(poly, alpha) == value


def test_derivative_word_size_mismatch():
    with pytest.raises(ValueError):
        derivative_word(x * x, (2, 1))


@pytest.mark.parametrize(
    "mono, reduced, depth",
    [
        (monomial([seg("a", 2, 0, 3)]), monomial([seg("a", 2, 0, 2)]), 2),
        (monomial([seg("a", 1, 0, 2), seg("b", 3, 0, 2)]), monomial([seg("a", 1, 0, 1), seg("b", 3, 0, 1)]), 4),
        (monomial([seg("a", 2, 0, 1)]), (), 2),
    ],
)
def test_highest_derivative(mono, reduced, depth):
    assert highest_derivative(mono) == (reduced, depth)


@pytest.mark.parametrize(
    "segments, wf",
    [
        ([seg("a", 2, 0, 3)], (2, 2, 2)),
        ([seg("a", 1, 0, 2), seg("b", 1, 5, 2)], (2, 2)),
        ([seg("a", 4, 0, 1)], (4,)),
        ([seg("a", 1, 0, 2), seg("b", 3, 0, 1)], (4, 1)),
        ([], ()),
    ],
)
def test_wf_and_depth_composition(segments, wf):
    mono = monomial(segments)
    assert wf_partition(mono) == wf
    assert depth_composition_padic(mono) == wf


def test_derivative_words_small_sizes():
    for mono in monomials(6):
        p = SegmentPoly.of(mono)
        wf = wf_partition(mono)
        assert derivative_word(p, wf) == 1
        for alpha in compositions(wf.n):
            w = derivative_word(p, alpha)
            assert w >= 0
            if w:
                assert dominates(wf, reorder(alpha))


def test_dc_equals_wf_up_to_ten():
    for mono in monomials(10):
        assert depth_composition_padic(mono) == wf_partition(mono)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("seg(a,1,0,2)^2", x * x),
        ("seg(a,1,0,2) + seg(a,1,0,1)", x + y),
        ("2*seg(a,1,0,2) - 3", 2 * x - 3),
        ("-(seg(a,1,0,2) - 1)^2", -(x - 1) ** 2),
        ("1", SegmentPoly.const(1)),
    ],
)
def test_parse_poly(text, expected):
    assert parse_poly(text) == expected


@pytest.mark.parametrize("text, pos", [("seg(a,1,0)", 4), ("seg(a,1,0,2) +", 14), ("seg(a,1,0,2) $", 13), ("(1", 2)])
def test_parse_poly_errors(text, pos):
    with pytest.raises(PolyParseError) as e:
        parse_poly(text)
    assert e.value.position == pos


@settings(max_examples=100, deadline=None)
@given(poly_st)
def test_poly_text_and_json_round_trip(p):
    assert parse_poly(str(p)) == p
    assert SegmentPoly.from_json(p.to_json()) == p


def test_random_homomorphism_sample():
    rng = random.Random(1)
    for _ in range(100):
        pool = random_segment_pool(rng, 5)
        p, q = random_poly(rng, pool), random_poly(rng, pool)
        assert total_derivative(p * q) == total_derivative(p) * total_derivative(q)
