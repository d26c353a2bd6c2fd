"""Infinitesimal characters of unitary representations of GL(n, R) as exact multisets.

Every entry is an :class:`~glrep.scalars.ExactScalar`. Formal parameters are
generic, so two entries coincide only when all their coefficients do. Names
appearing in real parts are read as Stein-type parameters in (0, 1/2).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .partitions import as_partition, transpose
from .reps import (
    Adduction,
    Character,
    Speh,
    SpehCS,
    Stein,
    UnitaryRep,
    adduce,
    associated_partition,
    format_rep,
)
from .scalars import HALF, ZERO, Affine, ExactScalar


class InfChar:
    """A finite multiset of exact complex scalars, kept sorted."""

    __slots__ = ("entries", "_counts")

    def __init__(self, entries: Iterable[ExactScalar] = ()):
        self.entries = tuple(sorted(entries))
        self._counts = None

    @property
    def counts(self) -> Counter:
        if self._counts is None:
            self._counts = Counter(self.entries)
        return self._counts

    def __len__(self):
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, InfChar) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __lt__(self, other: "InfChar"):
        return self.entries < other.entries

    def __or__(self, other: "InfChar") -> "InfChar":
        """Multiset union."""
        return InfChar(self.entries + other.entries)

    def shift(self, c) -> "InfChar":
        """Add a real constant (or affine form) to every entry."""
        c = Affine.lift(c)
        return InfChar(ExactScalar(z.re + c, z.im) for z in self.entries)

    def issubset(self, other: "InfChar") -> bool:
        big = other.counts
        return all(big[z] >= c for z, c in self.counts.items())

    def is_symmetric(self) -> bool:
        cnt = self.counts
        return all(cnt[z.negation_bar()] == c for z, c in cnt.items())

    def __repr__(self):
        return "{" + ", ".join(str(z) for z in self.entries) + "}"

    def to_json(self) -> list:
        return [z.to_json() for z in self.entries]

    @classmethod
    def from_json(cls, data: Sequence) -> "InfChar":
        return cls(ExactScalar.from_json(z) for z in data)


def segment(m: int, z) -> InfChar:
    """Arithmetic progression of length m, mean z, step 1."""
    if m < 1:
        raise ValueError("segment length must be positive")
    if not isinstance(z, ExactScalar):
        z = ExactScalar.of(z)
    return InfChar(z + Fraction(m + 1, 2) - j for j in range(1, m + 1))


def _center(re: Affine, t: Affine) -> ExactScalar:
    return ExactScalar(re, t)


@lru_cache(maxsize=8192)
def factor_inf_char(f) -> InfChar:
    m, t = f.m, f.t
    if isinstance(f, Character):
        return segment(m, _center(ZERO, t))
    if isinstance(f, Stein):
        return segment(m, _center(f.s, t)) | segment(m, _center(-f.s, t))
    half_k = Affine(Fraction(f.k, 2))
    if isinstance(f, Speh):
        return segment(m, _center(half_k, t)) | segment(m, _center(-half_k, t))
    out = InfChar()
    for a in (half_k, -half_k):
        for b in (f.s, -f.s):
            out = out | segment(m, _center(a + b, t))
    return out


def inf_char(pi: UnitaryRep) -> InfChar:
    out: list[ExactScalar] = []
    for f in pi.factors:
        out.extend(factor_inf_char(f).entries)
    return InfChar(out)


# ---------------------------------------------------------------- Casselman-Osborne


@dataclass(frozen=True)
class COReport:
    depth: int
    deficit: int
    primary: bool
    alternates: tuple[bool, ...] = ()

    @property
    def passed(self) -> bool:
        return self.primary and all(self.alternates)

    @property
    def any_passed(self) -> bool:
        return self.primary or any(self.alternates)


def _co_holds(xi: InfChar, adduced: UnitaryRep, d: int) -> bool:
    if xi.n - adduced.n != d:
        return False
    big = xi.counts
    need: Counter = Counter()
    for f in adduced.factors:
        need.update(_shifted_down(f).entries)
    return all(big[z] >= c for z, c in need.items())


@lru_cache(maxsize=8192)
def _shifted_down(f) -> InfChar:
    return factor_inf_char(f).shift(-HALF)


def casselman_osborne_check(pi: UnitaryRep, adduction: Adduction | None = None) -> COReport:
    """Is inf_char(A pi) - 1/2 a submultiset of inf_char(pi), of deficit depth(pi)?

    Every candidate for A pi (including ambiguity alternates) is checked.
    """
    a = adduction or adduce(pi)
    xi = inf_char(pi)
    primary = _co_holds(xi, a.rep, a.depth)
    alts = tuple(_co_holds(xi, r, a.depth) for r in a.alternates)
    return COReport(a.depth, len(xi) - a.rep.n, primary, alts)


# ---------------------------------------------------------------- symmetric submultisets


def _symmetric_orbits(xi: InfChar) -> list[tuple[tuple[ExactScalar, ...], int, int]]:
    """(members, max copies, cardinality per copy) for each orbit of z -> -conj(z)."""
    cnt = xi.counts
    seen = set()
    out = []
    for z in sorted(cnt):
        if z in seen:
            continue
        zb = z.negation_bar()
        seen.update((z, zb))
        if zb == z:
            out.append(((z,), cnt[z], 1))
        elif cnt[zb]:
            out.append(((z, zb), min(cnt[z], cnt[zb]), 2))
    return out


def symmetric_submultisets(xi: InfChar, target_size: int) -> list[InfChar]:
    """All submultisets of xi of the given size that are stable under z -> -conj(z)."""
    if target_size < 0 or target_size > len(xi):
        raise ValueError(f"target size {target_size} outside 0..{len(xi)}")
    orbits = _symmetric_orbits(xi)
    results: set[InfChar] = set()

    def rec(i: int, remaining: int, acc: list[ExactScalar]):
        if remaining == 0:
            results.add(InfChar(acc))
            return
        if i == len(orbits):
            return
        members, cap, width = orbits[i]
        for c in range(min(cap, remaining // width), -1, -1):
            rec(i + 1, remaining - c * width, acc + list(members) * c)

    rec(0, target_size, [])
    return sorted(results)


def symmetric_submultiset_search(
    xi: InfChar, target_size: int, ap: Iterable[int] | None = None
) -> list[InfChar]:
    """Symmetric submultisets of xi of size target_size.

    With ``ap`` given, only those that are the infinitesimal character of some
    unitary representation with that associated partition are kept.
    """
    found = symmetric_submultisets(xi, target_size)
    if ap is None:
        return found
    ap = as_partition(ap)
    return [c for c in found if realizations(c, ap)]


# ---------------------------------------------------------------- realization


def _segment_entries(length: int, center: ExactScalar) -> list[ExactScalar]:
    return list(segment(length, center).entries)


def segment_decompositions(xi: InfChar, lengths: Sequence[int]) -> list[tuple[tuple[int, ExactScalar], ...]]:
    """Ways to split xi into step-1 segments with the given multiset of lengths.

    Each way is a sorted tuple of (length, center).
    """
    if sum(lengths) != len(xi):
        return []
    results: set[tuple] = set()

    def rec(remaining: Counter, lens: Counter, acc: list):
        if not lens:
            if not +remaining:
                results.add(tuple(sorted(acc)))
            return
        e = min(z for z, c in remaining.items() if c > 0)
        for length in sorted(lens):
            for j in range(1, length + 1):
                center = e - (Fraction(length + 1, 2) - j)
                need = Counter(_segment_entries(length, center))
                if all(remaining[z] >= c for z, c in need.items()):
                    lens[length] -= 1
                    if lens[length] == 0:
                        del lens[length]
                    rec(remaining - need, lens, acc + [(length, center)])
                    lens[length] += 1

    rec(Counter(xi.entries), Counter(lengths), [])
    return sorted(results)


def admissible_stein_parameter(a: Affine) -> bool:
    """Whether a lies in (0, 1/2) for every value of its parameters in (0, 1/2)."""
    lo, hi = a.range_over_box()
    if a.is_constant:
        return 0 < a.const < Fraction(1, 2)
    return lo >= 0 and hi <= Fraction(1, 2)


def _speh_k(re: Affine) -> int | None:
    if not re.is_constant or re.const <= 0:
        return None
    two = 2 * re.const
    return int(two) if two.denominator == 1 else None


def _group_factors(segs: list[tuple[int, ExactScalar]]) -> Iterator[list]:
    """Assign the segments to basic factors in every admissible way."""
    if not segs:
        yield []
        return
    (length, c0), rest = segs[0], segs[1:]
    if c0.re == ZERO:
        for tail in _group_factors(rest):
            yield [Character(length, 0, c0.im)] + tail
    same = [i for i, (l, c) in enumerate(rest) if l == length and c.im == c0.im]
    for i in same:
        c1 = rest[i][1]
        others = rest[:i] + rest[i + 1 :]
        if c1.re == -c0.re:
            s = c0.re if admissible_stein_parameter(c0.re) else (-c0.re if admissible_stein_parameter(-c0.re) else None)
            if s is not None:
                for tail in _group_factors(others):
                    yield [Stein(length, s, 0, c0.im)] + tail
            k = _speh_k(c0.re) or _speh_k(-c0.re)
            if k is not None:
                for tail in _group_factors(others):
                    yield [Speh(length, k, c0.im)] + tail
    for a_i in range(len(same)):
        for b_i in range(a_i + 1, len(same)):
            for c_i in range(b_i + 1, len(same)):
                idx = (same[a_i], same[b_i], same[c_i])
                four = [c0.re] + [rest[i][1].re for i in idx]
                others = [x for j, x in enumerate(rest) if j not in idx]
                for f in _spehcs_from_centers(length, four, c0.im):
                    for tail in _group_factors(others):
                        yield [f] + tail


def _spehcs_from_centers(length: int, reals: list[Affine], t: Affine) -> list[SpehCS]:
    out = []
    r0 = reals[0]
    for r1 in reals[1:]:
        a = (r0 + r1) * Fraction(1, 2)
        b = (r0 - r1) * Fraction(1, 2)
        for half_k, s in ((a, b), (a, -b), (-a, b), (-a, -b)):
            k = _speh_k(half_k)
            if k is None or not admissible_stein_parameter(s):
                continue
            expect = sorted([half_k + s, half_k - s, -half_k + s, -half_k - s])
            if expect == sorted(reals):
                f = SpehCS(length, k, s, t)
                if f not in out:
                    out.append(f)
    return out


def realizations(xi: InfChar, ap: Iterable[int]) -> list[UnitaryRep]:
    """Unitary representations (up to sign twists) with infinitesimal character xi
    and associated partition ap."""
    ap = as_partition(ap)
    lengths = list(transpose(ap))
    if sum(lengths) != len(xi):
        return []
    found: dict[UnitaryRep, None] = {}
    for segs in segment_decompositions(xi, lengths):
        for factors in _group_factors(list(segs)):
            pi = UnitaryRep(tuple(factors))
            if associated_partition(pi) == ap and inf_char(pi) == xi:
                found[pi] = None
    return sorted(found, key=format_rep)


# ---------------------------------------------------------------- uniqueness


def dominates_over_box(f: Affine, g: Affine) -> bool:
    lo, _ = (f - g).range_over_box()
    return lo >= 0


@dataclass(frozen=True)
class UniquenessVerdict:
    rep: UnitaryRep
    no_integral_two_re: bool
    max_two_re: Affine | None
    expected_max_two_re: Affine
    realizations: tuple[UnitaryRep, ...]

    @property
    def max_matches(self) -> bool:
        return self.max_two_re == self.expected_max_two_re

    @property
    def unique(self) -> bool:
        return self.no_integral_two_re and self.max_matches and self.realizations == (self.rep,)


def uniqueness_of_spehcs(m: int, k: int, s_name: str = "s", t_name: str = "t") -> UniquenessVerdict:
    """Check that psi(4m, k, s; it) is pinned down by its (AP, infinitesimal character)."""
    if m < 1 or k < 1:
        raise ValueError("need m >= 1 and k >= 1")
    s, t = Affine.param(s_name), Affine.param(t_name)
    pi = UnitaryRep((SpehCS(m, k, s, t),))
    xi = inf_char(pi)
    no_int = all(not z.re.is_constant for z in xi)
    res = [z.re for z in xi]
    top = [r for r in res if all(dominates_over_box(r, other) for other in res)]
    max_two = top[0] * 2 if top else None
    expected = Affine(m - 1 + k) + s * 2
    reals = tuple(realizations(xi, (4,) * m))
    return UniquenessVerdict(pi, no_int, max_two, expected, reals)
