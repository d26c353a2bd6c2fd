"""The Grothendieck ring of GL(n) over a p-adic field as a polynomial ring in
segment indeterminates, with the Bernstein-Zelevinsky total derivative.

A segment <Delta> = (rho, nu rho, ..., nu^(l-1) rho) over a cuspidal rho of
G_d has size d*l, and D<Delta> = <Delta> + <Delta^->, where Delta^- drops the
last term (and <empty> = 1). D extends to a ring homomorphism.
"""

from __future__ import annotations

import random
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping

from .partitions import Composition, Partition, orbit_sum


@dataclass(frozen=True, order=True)
class Cuspidal:
    label: str
    depth: int

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("cuspidal depth must be positive")


@dataclass(frozen=True, order=True)
class Segment:
    rho: Cuspidal
    start: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("segment length must be positive")

    @property
    def depth(self) -> int:
        return self.rho.depth

    @property
    def size(self) -> int:
        return self.rho.depth * self.length

    def minus(self) -> "Segment | None":
        """Drop the last cuspidal; None for the empty segment."""
        return Segment(self.rho, self.start, self.length - 1) if self.length > 1 else None

    def wf_partition(self) -> Partition:
        return Partition((self.depth,) * self.length)

    def __str__(self):
        return f"seg({self.rho.label},{self.rho.depth},{self.start},{self.length})"

    def to_json(self) -> dict:
        return {"label": self.rho.label, "d": self.rho.depth, "start": self.start, "l": self.length}

    @classmethod
    def from_json(cls, d: Mapping) -> "Segment":
        return cls(Cuspidal(str(d["label"]), int(d["d"])), int(d["start"]), int(d["l"]))


def seg(label: str, d: int, start: int, l: int) -> Segment:
    return Segment(Cuspidal(label, d), start, l)


# A monomial is a sorted tuple of (segment, exponent) pairs; () is the unit.
Monomial = tuple


def monomial(segments: Iterable[Segment]) -> Monomial:
    return tuple(sorted(Counter(segments).items()))


def monomial_size(mono: Monomial) -> int:
    return sum(s.size * e for s, e in mono)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    c = Counter(dict(a))
    for s, e in b:
        c[s] += e
    return tuple(sorted(c.items()))


class SegmentPoly:
    """Integer combination of segment monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, c: int) -> "SegmentPoly":
        return cls({(): c})

    @classmethod
    def of(cls, x: "SegmentPoly | Segment | int | Monomial") -> "SegmentPoly":
        if isinstance(x, SegmentPoly):
            return x
        if isinstance(x, Segment):
            return cls({((x, 1),): 1})
        if isinstance(x, int):
            return cls.const(x)
        if isinstance(x, tuple):
            return cls({x: 1})
        raise TypeError(f"cannot make a polynomial from {x!r}")

    def __eq__(self, other):
        if isinstance(other, (int, Segment)):
            other = SegmentPoly.of(other)
        return isinstance(other, SegmentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other) -> "SegmentPoly":
        other = SegmentPoly.of(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return SegmentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "SegmentPoly":
        return SegmentPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "SegmentPoly":
        return self + (-SegmentPoly.of(other))

    def __rsub__(self, other) -> "SegmentPoly":
        return SegmentPoly.of(other) - self

    def __mul__(self, other) -> "SegmentPoly":
        other = SegmentPoly.of(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return SegmentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SegmentPoly":
        if k < 0:
            raise ValueError("negative power")
        out = SegmentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def sizes(self) -> set[int]:
        return {monomial_size(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.sizes()) <= 1

    def component(self, size: int) -> "SegmentPoly":
        return SegmentPoly({m: c for m, c in self.terms.items() if monomial_size(m) == size})

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def __repr__(self):
        return f"SegmentPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    def to_json(self) -> list:
        return [
            {"coeff": c, "monomial": [s.to_json() for s, e in m for _ in range(e)]}
            for m, c in sorted(self.terms.items())
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "SegmentPoly":
        out = SegmentPoly()
        for term in data:
            out = out + SegmentPoly({monomial(Segment.from_json(s) for s in term["monomial"]): int(term["coeff"])})
        return out


def format_poly(x: SegmentPoly) -> str:
    if not x.terms:
        return "0"
    pieces = []
    for m, c in sorted(x.terms.items(), key=lambda mc: (-monomial_size(mc[0]), mc[0])):
        body = "*".join(str(s) if e == 1 else f"{s}^{e}" for s, e in m)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        pieces.append(("-" if c < 0 else "+", text))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out


# ---------------------------------------------------------------- derivatives


@lru_cache(maxsize=None)
def _segment_power_derivative(s: Segment, e: int) -> tuple[tuple[Monomial, int], ...]:
    """Terms of (<s> + <s^->)^e."""
    lo = s.minus()
    out = []
    for j in range(e + 1):
        mono: list[tuple[Segment, int]] = []
        if e - j:
            mono.append((s, e - j))
        if j and lo is not None:
            mono.append((lo, j))
        out.append((tuple(sorted(mono)), comb(e, j)))
    return tuple(out)


def _monomial_derivative(mono: Monomial) -> SegmentPoly:
    out = SegmentPoly.const(1)
    for s, e in mono:
        out = out * SegmentPoly(_merge_terms(_segment_power_derivative(s, e)))
    return out


def _merge_terms(terms) -> dict:
    d: dict = {}
    for m, c in terms:
        d[m] = d.get(m, 0) + c
    return d


def total_derivative(x) -> SegmentPoly:
    """The ring homomorphism D with D<Delta> = <Delta> + <Delta^->."""
    x = SegmentPoly.of(x)
    out = SegmentPoly()
    for m, c in x.terms.items():
        out = out + _monomial_derivative(m) * c
    return out


class NotHomogeneous(ValueError):
    pass


def graded_derivative(x, k: int) -> SegmentPoly:
    """D^k x: the part of D x of size |x| - k, for homogeneous x."""
    x = SegmentPoly.of(x)
    if not x:
        return SegmentPoly()
    sizes = x.sizes()
    if len(sizes) != 1:
        raise NotHomogeneous(f"sizes {sorted(sizes)}")
    n = sizes.pop()
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= {n}, got {k}")
    if k == 0:
        return x
    return total_derivative(x).component(n - k)


def derivative_word(x, alpha: Iterable[int]) -> int:
    """Apply D^alpha_1 first, then D^alpha_2, ..., and read off the constant.

    For a product of segment representations this is dim Wh*_alpha.
    """
    x = SegmentPoly.of(x)
    alpha = Composition(alpha)
    sizes = x.sizes() if x else {alpha.n}
    if len(sizes) != 1:
        raise NotHomogeneous(f"sizes {sorted(sizes)}")
    n = next(iter(sizes))
    if n != alpha.n:
        raise ValueError(f"|alpha| = {alpha.n} but x has size {n}")
    for a in alpha:
        if not x:
            return 0
        x = graded_derivative(x, a)
    return x.constant_term()


def _as_monomial(x) -> Monomial:
    if isinstance(x, Segment):
        return ((x, 1),)
    if isinstance(x, SegmentPoly):
        if len(x.terms) != 1 or next(iter(x.terms.values())) != 1:
            raise ValueError("expected a single monomial with coefficient 1")
        return next(iter(x.terms))
    if isinstance(x, tuple):
        return x
    raise TypeError(f"not a monomial: {x!r}")


def highest_derivative(x) -> tuple[Monomial, int]:
    """(prod <Delta_i^->, sum of depths) for a monomial prod <Delta_i>."""
    mono = _as_monomial(x)
    out: list[Segment] = []
    depth = 0
    for s, e in mono:
        depth += s.depth * e
        lo = s.minus()
        if lo is not None:
            out.extend([lo] * e)
    return monomial(out), depth


def depth_composition_padic(x) -> Composition:
    mono = _as_monomial(x)
    out = []
    while mono:
        mono, d = highest_derivative(mono)
        out.append(d)
    return Composition(out)


def wf_partition(x) -> Partition:
    """Sum over the factors of length(Delta) parts of size depth(Delta)."""
    lam = Partition()
    for s, e in _as_monomial(x):
        for _ in range(e):
            lam = orbit_sum(lam, s.wf_partition())
    return lam


# ---------------------------------------------------------------- enumeration


def segment_shapes(max_size: int, depths: Iterable[int] = (1, 2, 3)) -> list[Segment]:
    """One segment per (depth, length) with size at most max_size, cuspidal label 'r<d>'."""
    out = []
    for d in depths:
        for l in range(1, max_size // d + 1):
            out.append(seg(f"r{d}", d, 0, l))
    return sorted(out, key=lambda s: (s.size, s.depth))


def monomials(max_size: int, depths: Iterable[int] = (1, 2, 3), min_size: int = 1) -> Iterator[Monomial]:
    """Every monomial in the segment shapes of total size in [min_size, max_size]."""
    shapes = segment_shapes(max_size, depths)

    def rec(start: int, remaining: int, acc: list[Segment]):
        if acc and max_size - remaining >= min_size:
            yield monomial(acc)
        for i in range(start, len(shapes)):
            s = shapes[i]
            if s.size > remaining:
                break
            acc.append(s)
            yield from rec(i, remaining - s.size, acc)
            acc.pop()

    yield from rec(0, max_size, [])


def random_poly(rng: random.Random, pool: list[Segment], max_terms: int = 4, max_degree: int = 3) -> SegmentPoly:
    out = SegmentPoly()
    for _ in range(rng.randint(1, max_terms)):
        mono = [rng.choice(pool) for _ in range(rng.randint(0, max_degree))]
        out = out + SegmentPoly({monomial(mono): rng.randint(-9, 9)})
    return out


def random_segment_pool(rng: random.Random, count: int = 5) -> list[Segment]:
    pool: set[Segment] = set()
    while len(pool) < count:
        pool.add(seg(rng.choice("abc"), rng.randint(1, 3), rng.randint(-2, 2), rng.randint(1, 3)))
    return sorted(pool)


# ---------------------------------------------------------------- parsing


class PolyParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


_TOKEN = re.compile(r"\s*(?:(seg)\s*\(([^()]*)\)|(\d+)|([-+*^()]))")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolyParseError("unexpected character", text, pos + len(text[pos:]) - len(text[pos:].lstrip()))
        if m.group(1):
            args = [a.strip() for a in m.group(2).split(",")]
            if len(args) != 4:
                raise PolyParseError("seg takes (label, d, start, l)", text, m.start(2))
            try:
                s = seg(args[0], int(args[1]), int(args[2]), int(args[3]))
            except ValueError as e:
                raise PolyParseError(str(e), text, m.start(2)) from None
            toks.append(("seg", s, m.start(1)))
        elif m.group(3):
            toks.append(("int", int(m.group(3)), m.start(3)))
        else:
            toks.append(("op", m.group(4), m.start(4)))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


def parse_poly(text: str) -> SegmentPoly:
    """Parse expressions like ``seg(a,1,0,2)^2 - 3*seg(b,2,0,1) + 1``."""
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def take(kind=None, value=None):
        nonlocal i
        tok = toks[i]
        if (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            raise PolyParseError(f"expected {value or kind}", text, tok[2])
        i += 1
        return tok

    def expr():
        sign = 1
        if peek()[:2] in (("op", "-"), ("op", "+")):
            sign = -1 if take()[1] == "-" else 1
        out = term() * sign
        while peek()[:2] in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term():
        out = factor()
        while peek()[:2] == ("op", "*"):
            take()
            out = out * factor()
        return out

    def factor():
        base = atom()
        if peek()[:2] == ("op", "^"):
            take()
            e = take("int")[1]
            base = base**e
        return base

    def atom():
        tok = peek()
        if tok[0] == "seg":
            take()
            return SegmentPoly.of(tok[1])
        if tok[0] == "int":
            take()
            return SegmentPoly.const(tok[1])
        if tok[:2] == ("op", "("):
            take()
            out = expr()
            take("op", ")")
            return out
        raise PolyParseError("expected a segment, integer or '('", text, tok[2])

    out = expr()
    if peek()[0] != "end":
        raise PolyParseError("trailing input", text, peek()[2])
    return out
