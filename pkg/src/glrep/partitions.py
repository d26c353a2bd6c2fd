"""Compositions and partitions.

Partitions are stored nonincreasing, e.g. ``4^2 2 1^3 == (4, 4, 2, 1, 1, 1)``.
The empty partition stands for n = 0.
"""

from __future__ import annotations

import re
from itertools import accumulate, zip_longest
from typing import Iterable, Iterator


class SizeMismatch(ValueError):
    """Two partitions of different totals were compared."""


class ParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class Composition(tuple):
    """A finite sequence of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"parts must be positive integers, got {parts!r}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"{type(self).__name__}({tuple(self)!r})"

    def __str__(self):
        return format_exponential(self)


class Partition(Composition):
    """A nonincreasing composition."""

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        if any(a < b for a, b in zip(self, self[1:])):
            raise ValueError(f"partition parts must be nonincreasing, got {tuple(self)!r}")
        return self


def reorder(alpha: Iterable[int], direction: str = "nonincreasing") -> Composition:
    if direction == "nonincreasing":
        return Partition(sorted(alpha, reverse=True))
    if direction == "nondecreasing":
        return Composition(sorted(alpha))
    raise ValueError(f"unknown direction {direction!r}")


def as_partition(alpha: Iterable[int]) -> Partition:
    return reorder(alpha, "nonincreasing")


def transpose(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, max(lam) + 1))


def orbit_sum(lam: Iterable[int], mu: Iterable[int]) -> Partition:
    """Componentwise sum, missing parts read as 0."""
    return Partition(a + b for a, b in zip_longest(lam, mu, fillvalue=0))


def dominates(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """True iff every prefix sum of ``mu`` is at most that of ``lam``."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| = {sum(lam)} but |{mu}| = {sum(mu)}")
    pl = list(accumulate(lam))
    pm = list(accumulate(mu))
    total = sum(lam)
    for a, b in zip_longest(pl, pm, fillvalue=total):
        if b > a:
            return False
    return True


_FACTOR = re.compile(r"\s*(\d+)(?:\s*\^\s*(\d+))?")


def parse_exponential(text: str) -> Composition:
    """Parse ``"4^2 2 1^3"`` into ``(4, 4, 2, 1, 1, 1)``.

    Factors are emitted in the order written, so the result is a composition.
    """
    parts: list[int] = []
    pos = 0
    stripped = text.rstrip()
    if not stripped:
        raise ParseError("empty partition text", text, 0)
    while pos < len(stripped):
        m = _FACTOR.match(stripped, pos)
        if m is None:
            bad = pos + len(stripped[pos:]) - len(stripped[pos:].lstrip())
            raise ParseError("expected a positive integer", text, bad)
        base = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if base < 1:
            raise ParseError("base must be >= 1", text, m.start(1))
        if exp < 1:
            raise ParseError("exponent must be >= 1", text, m.start(2))
        parts.extend([base] * exp)
        pos = m.end()
    return Composition(parts)


def format_exponential(alpha: Iterable[int]) -> str:
    """Group equal consecutive parts; ``^`` is written only for exponents above 1."""
    out = []
    alpha = list(alpha)
    i = 0
    while i < len(alpha):
        j = i
        while j < len(alpha) and alpha[j] == alpha[i]:
            j += 1
        e = j - i
        out.append(f"{alpha[i]}^{e}" if e > 1 else f"{alpha[i]}")
        i = j
    return " ".join(out)


def parse_partition_arg(text: str) -> Composition:
    """Accept exponential (``2^2``) or comma (``2,2`` / ``(2,2)``) forms."""
    t = text.strip()
    if t in ("", "()", "[]"):
        return Composition()
    if "," in t or t.startswith(("(", "[")):
        body = t.strip("()[]")
        items = [x.strip() for x in body.split(",") if x.strip()]
        parts = []
        offset = 0
        for item in items:
            if not item.isdigit() or int(item) < 1:
                raise ParseError("expected a positive integer", text, text.find(item, offset))
            offset = text.find(item, offset) + len(item)
            parts.append(int(item))
        return Composition(parts)
    return parse_exponential(t)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


def compositions(n: int) -> Iterator[Composition]:
    if n == 0:
        yield Composition()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield Composition((first,) + tuple(rest))
