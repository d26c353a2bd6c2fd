from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from glrep.infchar import (
    InfChar,
    admissible_stein_parameter,
    casselman_osborne_check,
    inf_char,
    realizations,
    segment,
    segment_decompositions,
    symmetric_submultiset_search,
    symmetric_submultisets,
    uniqueness_of_spehcs,
)
from glrep.reps import STAR, Character, Speh, SpehCS, adduce, associated_partition, catalog, parse_rep, rep, unitary_twist
from glrep.scalars import HALF, Affine, ExactScalar, parse_affine

s, t = Affine.param("s"), Affine.param("t")
CATALOG_8 = list(catalog(8))


def xs(*values):
    return InfChar(ExactScalar.of(v) for v in values)


@pytest.mark.parametrize(
    "m, z, expected",
    [(3, 0, (1, 0, -1)), (1, "s", ("s",)), (2, Fraction(1, 2), (1, 0))],
)
def test_segment(m, z, expected):
    assert segment(m, z) == xs(*expected)


def test_segment_reflection_and_symmetry():
    for m in range(1, 6):
        z = ExactScalar.of("s", "t")
        seg = segment(m, z)
        assert InfChar(z + z - e for e in seg) == seg
        assert segment(m, ExactScalar.of(0, "t")).is_symmetric()
        assert not seg.is_symmetric()


def test_inf_char_examples():
    assert inf_char(rep(Speh(1, 3))) == xs(Fraction(3, 2), Fraction(-3, 2))
    assert inf_char(rep(Character(3, 1, t))) == segment(3, ExactScalar(Affine(), t))
    expected = [Fraction(k, 2) + sgn * s for k in (1, -1) for sgn in (1, -1)]
    assert inf_char(rep(SpehCS(1, 1, s))) == InfChar(ExactScalar(e, Affine()) for e in expected)


def test_inf_char_size_symmetry_and_union():
    for pi in CATALOG_8:
        xi = inf_char(pi)
        assert len(xi) == pi.n
        assert xi.is_symmetric()
    for pi in CATALOG_8[::131]:
        for tau in CATALOG_8[::211]:
            assert inf_char(pi * tau) == inf_char(pi) | inf_char(tau)


def test_casselman_osborne_examples():
    r = casselman_osborne_check(rep(Character(2)))
    assert r.passed and r.depth == r.deficit == 1
    r = casselman_osborne_check(rep(Speh(1, 4)))
    assert r.passed and r.depth == 2
    for k in (1, 3):
        assert casselman_osborne_check(rep(SpehCS(2, k, s))).passed


def test_casselman_osborne_both_candidates_on_catalog():
    for pi in CATALOG_8:
        r = casselman_osborne_check(pi)
        assert r.passed, pi
        assert len(r.alternates) == len(adduce(pi).alternates)


def test_symmetric_submultisets_trivial():
    xi = InfChar([ExactScalar(s, Affine()), ExactScalar(-s, Affine())])
    assert symmetric_submultisets(xi, 0) == [InfChar()]
    assert symmetric_submultisets(xi, 2) == [xi]
    assert symmetric_submultisets(xi, 1) == []
    with pytest.raises(ValueError):
        symmetric_submultisets(xi, 3)


@pytest.mark.parametrize("m, k", [(2, 1), (2, 3), (3, 1), (3, 2), (2, 2), (3, 3), (4, 4)])
def test_spehcs_search_matches_adduction(m, k):
    psi = rep(SpehCS(m, k, s))
    found = symmetric_submultiset_search(inf_char(psi).shift(HALF), 4 * (m - 1), ap=(4,) * (m - 1))
    a = adduce(psi)
    assert set(found) == {inf_char(r) for r in (a.rep, *a.alternates)}
    assert len(found) == (2 if k == m else 1)


def test_spehcs_raw_search_is_a_superset():
    psi = rep(SpehCS(2, 2, s))
    xi = inf_char(psi).shift(HALF)
    raw = symmetric_submultiset_search(xi, 4)
    filtered = symmetric_submultiset_search(xi, 4, ap=(4,))
    assert set(filtered) < set(raw)
    assert all(c.is_symmetric() and c.issubset(xi) for c in raw)


def test_segment_decompositions():
    xi = segment(3, 0) | segment(1, Fraction(1, 2))
    decs = segment_decompositions(xi, [3, 1])
    assert decs == [((1, ExactScalar.of(Fraction(1, 2))), (3, ExactScalar.of(0)))]
    assert segment_decompositions(xi, [2, 2]) == []


@pytest.mark.parametrize(
    "text, ok", [("s", True), ("1/2 - s", True), ("1/4", True), ("1/2", False), ("2*s", False), ("-s", False), ("0", False)]
)
def test_admissible_stein_parameter(text, ok):
    assert admissible_stein_parameter(parse_affine(text)) is ok


@pytest.mark.parametrize("text", ["chi(3) x speh(4,2)", "stein(4,s) x chi(1)", "spehcs(8,1,s)", "speh(2,1) x speh(2,3)"])
def test_realizations_recover_rep(text):
    pi = parse_rep(text)
    found = realizations(inf_char(pi), associated_partition(pi))
    assert pi in found


@pytest.mark.parametrize("m, k", [(1, 1), (2, 1), (1, 2), (3, 2), (2, 3)])
def test_uniqueness_of_spehcs(m, k):
    v = uniqueness_of_spehcs(m, k)
    assert v.no_integral_two_re
    assert v.max_two_re == Affine(m - 1 + k) + 2 * s
    assert v.unique


def test_infchar_json_round_trip():
    xi = inf_char(parse_rep("spehcs(8,2,s,t) x chi(2)"))
    assert InfChar.from_json(xi.to_json()) == xi


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CATALOG_8))
def test_inf_char_twist_shifts_imaginary_parts(pi):
    xi = inf_char(pi)
    shifted = InfChar(ExactScalar(z.re, z.im + Affine.param("u")) for z in xi)
    assert inf_char(unitary_twist(pi, "u")) == shifted
    assert inf_char(STAR) == InfChar()
