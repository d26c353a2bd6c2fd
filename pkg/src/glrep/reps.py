"""Unitary dual of GL(n, R): Vogan classification data and its invariants.

A :class:`UnitaryRep` is a commutative product of basic representations

* ``Character(m, eps, t)``   the character (sgn det)^eps |det|^(it) of G_m
* ``Stein(m, s, eps, t)``    sigma(2m, s; eps, it), a rep of G_2m
* ``Speh(m, k, t)``          delta(2m, k; it), a rep of G_2m
* ``SpehCS(m, k, s, t)``     psi(4m, k, s; it), a rep of G_4m

The field ``m`` is the block size: the number of columns each basic factor
adds to the transposed associated partition. Parameters ``s`` and ``t`` are
:class:`~glrep.scalars.Affine` forms, so they may be symbolic.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Union

from .orbits import dimension
from .partitions import Composition, Partition, SizeMismatch, as_partition, dominates, transpose
from .scalars import HALF, ZERO, Affine


@dataclass(frozen=True)
class Character:
    m: int
    eps: int = 0
    t: Affine = ZERO
    kind = "chi"
    block_count = 1

    @property
    def size(self) -> int:
        return self.m


@dataclass(frozen=True)
class Stein:
    m: int
    s: Affine
    eps: int = 0
    t: Affine = ZERO
    kind = "stein"
    block_count = 2

    @property
    def size(self) -> int:
        return 2 * self.m


@dataclass(frozen=True)
class Speh:
    m: int
    k: int
    t: Affine = ZERO
    kind = "speh"
    block_count = 2

    @property
    def size(self) -> int:
        return 2 * self.m


@dataclass(frozen=True)
class SpehCS:
    m: int
    k: int
    s: Affine
    t: Affine = ZERO
    kind = "spehcs"
    block_count = 4

    @property
    def size(self) -> int:
        return 4 * self.m


BasicRep = Union[Character, Stein, Speh, SpehCS]
_KIND_ORDER = {"chi": 0, "stein": 1, "speh": 2, "spehcs": 3}


def _validate(f: BasicRep) -> BasicRep:
    if not isinstance(f.m, int) or f.m < 1:
        raise ValueError(f"block size must be a positive integer: {f!r}")
    if isinstance(f, (Character, Stein)) and f.eps not in (0, 1):
        raise ValueError(f"eps must be 0 or 1: {f!r}")
    if isinstance(f, (Speh, SpehCS)) and (not isinstance(f.k, int) or f.k < 1):
        raise ValueError(f"k must be a positive integer: {f!r}")
    for name in ("s", "t"):
        if hasattr(f, name) and not isinstance(getattr(f, name), Affine):
            f = replace(f, **{name: Affine.lift(getattr(f, name))})
    if isinstance(f, (Stein, SpehCS)) and f.s.is_constant and not 0 < f.s.const < Fraction(1, 2):
        raise ValueError(f"a numeric s must lie strictly between 0 and 1/2: {f!r}")
    return f


def factor_key(f: BasicRep) -> tuple:
    return (
        _KIND_ORDER[f.kind],
        f.m,
        getattr(f, "k", 0),
        getattr(f, "eps", 0),
        getattr(f, "s", ZERO),
        f.t,
    )


@dataclass(frozen=True)
class UnitaryRep:
    """A product pi_1 x ... x pi_k, stored in canonical (sorted) order.

    The empty product is the trivial representation of G_0.
    """

    factors: tuple[BasicRep, ...] = ()

    def __post_init__(self):
        fs = tuple(sorted((_validate(f) for f in self.factors), key=factor_key))
        object.__setattr__(self, "factors", fs)

    @property
    def n(self) -> int:
        return sum(f.size for f in self.factors)

    def __mul__(self, other: "UnitaryRep") -> "UnitaryRep":
        return UnitaryRep(self.factors + other.factors)

    def __str__(self):
        return format_rep(self)

    def to_json(self) -> dict:
        return {"factors": [factor_to_json(f) for f in self.factors]}

    @classmethod
    def from_json(cls, data: dict) -> "UnitaryRep":
        return cls(tuple(factor_from_json(f) for f in data["factors"]))


STAR = UnitaryRep()


def rep(*factors: BasicRep) -> UnitaryRep:
    return UnitaryRep(tuple(factors))


def blocks(pi: UnitaryRep) -> list[int]:
    """Column lengths of AP(pi): p for each character of G_p, m twice for
    Stein and Speh blocks of size 2m, m four times for psi(4m, ...)."""
    out: list[int] = []
    for f in pi.factors:
        out.extend([f.m] * f.block_count)
    return out


def associated_partition(pi: UnitaryRep) -> Partition:
    return transpose(as_partition(blocks(pi)))


def rank(pi: UnitaryRep) -> int:
    if pi.n < 1:
        raise ValueError("rank is defined for n >= 1")
    return pi.n - len(associated_partition(pi))


def gk_dimension(pi: UnitaryRep) -> int:
    d = dimension(associated_partition(pi))
    assert d % 2 == 0
    return d // 2


def gk_dimension_closed_form(pi: UnitaryRep) -> Fraction:
    """(n^2 - sum p_i^2 - 2 sum q_j^2) / 2 over characters p_i and Speh-type halves q_j."""
    n = pi.n
    total = Fraction(n * n)
    for f in pi.factors:
        total -= f.block_count * f.m * f.m
    return total / 2


def howe_rank(pi: UnitaryRep) -> int:
    return min(pi.n // 2, rank(pi))


class NoAdducedRep(ValueError):
    """The trivial representation of G_0 has no adduced representation."""


@dataclass(frozen=True)
class Adduction:
    rep: UnitaryRep
    depth: int
    alternates: tuple[UnitaryRep, ...] = ()

    @property
    def ambiguous(self) -> bool:
        return bool(self.alternates)


def _adduce_factor(f: BasicRep) -> list[BasicRep]:
    if f.m == 1:
        return []
    return [replace(f, m=f.m - 1)]


def _spehcs_alternate(f: SpehCS) -> list[BasicRep]:
    """The second candidate psi(4m-4, m-1, 1/2 - s; it) for k = m."""
    if f.m == 1:
        return []
    return [SpehCS(f.m - 1, f.m - 1, HALF - f.s, f.t)]


def adduce(pi: UnitaryRep) -> Adduction:
    """Factorwise adduction; every size parameter drops by one.

    For psi(4m, m, s; it) with m >= 2 the value psi(4m-4, m, s; it) is
    returned and each combination using psi(4m-4, m-1, 1/2-s; it) instead is
    listed in ``alternates``. At m = 1 both candidates are the trivial rep of
    G_0, so no alternate arises.
    """
    if pi.n == 0:
        raise NoAdducedRep("the trivial rep of G_0 has no adduced representation")
    options: list[list[list[BasicRep]]] = []
    depth = 0
    for f in pi.factors:
        depth += f.block_count
        primary = _adduce_factor(f)
        opts = [primary]
        if isinstance(f, SpehCS) and f.k == f.m:
            alt = _spehcs_alternate(f)
            if alt != primary:
                opts.append(alt)
        options.append(opts)
    results = [UnitaryRep(tuple(x for part in choice for x in part)) for choice in product(*options)]
    primary_rep = results[0]
    alternates = tuple(dict.fromkeys(r for r in results[1:] if r != primary_rep))
    return Adduction(primary_rep, depth, alternates)


def depth(pi: UnitaryRep) -> int:
    return adduce(pi).depth


def adduction_chain(pi: UnitaryRep) -> list[Adduction]:
    out = []
    while pi.n > 0:
        a = adduce(pi)
        out.append(a)
        pi = a.rep
    return out


def depth_composition(pi: UnitaryRep) -> Composition:
    """Depths collected while iterating :func:`adduce` down to G_0."""
    return Composition(a.depth for a in adduction_chain(pi))


class Verdict(enum.Enum):
    GUARANTEED_TRUE = "guaranteed-true"
    GUARANTEED_FALSE = "guaranteed-false"
    UPPER_BOUND_ONLY = "upper-bound-only"

    def __str__(self):
        return self.value


def whittaker_nonvanishing(pi: UnitaryRep, alpha: Iterable[int]) -> Verdict:
    """Three-valued answer to whether Wh*_alpha(pi) is nonzero.

    Nonvanishing is known at the associated partition; vanishing is known
    outside the closure of its orbit. Strictly smaller orbits are left open.
    """
    alpha = Composition(alpha)
    lam = associated_partition(pi)
    if alpha.n != pi.n:
        raise SizeMismatch(f"|alpha| = {alpha.n} but n = {pi.n}")
    beta = as_partition(alpha)
    if beta == lam:
        return Verdict.GUARANTEED_TRUE
    if not dominates(lam, beta):
        return Verdict.GUARANTEED_FALSE
    return Verdict.UPPER_BOUND_ONLY


def sign_twist(pi: UnitaryRep) -> UnitaryRep:
    """Tensor with sgn det; Speh-type factors are unchanged."""
    out = []
    for f in pi.factors:
        if isinstance(f, (Character, Stein)):
            f = replace(f, eps=1 - f.eps)
        out.append(f)
    return UnitaryRep(tuple(out))


def unitary_twist(pi: UnitaryRep, t: "Affine | int | Fraction | str") -> UnitaryRep:
    """Tensor with |det|^(it)."""
    t = Affine.lift(t)
    return UnitaryRep(tuple(replace(f, t=f.t + t) for f in pi.factors))


def is_small_by_structure(pi: UnitaryRep, k: int) -> bool:
    """Whether pi = sigma x chi with chi a character of G_(n-k)."""
    return any(isinstance(f, Character) and f.m == pi.n - k for f in pi.factors)


# ---------------------------------------------------------------- text and JSON


def factor_to_json(f: BasicRep) -> dict:
    d: dict = {"kind": f.kind, "m": f.m}
    if hasattr(f, "k"):
        d["k"] = f.k
    if hasattr(f, "s"):
        d["s"] = f.s.to_json()
    if hasattr(f, "eps"):
        d["eps"] = f.eps
    d["t"] = f.t.to_json()
    return d


def factor_from_json(d: dict) -> BasicRep:
    t = Affine.from_json(d["t"]) if "t" in d else ZERO
    kind = d["kind"]
    if kind == "chi":
        return Character(d["m"], d.get("eps", 0), t)
    if kind == "stein":
        return Stein(d["m"], Affine.from_json(d["s"]), d.get("eps", 0), t)
    if kind == "speh":
        return Speh(d["m"], d["k"], t)
    if kind == "spehcs":
        return SpehCS(d["m"], d["k"], Affine.from_json(d["s"]), t)
    raise ValueError(f"unknown factor kind {kind!r}")


def format_factor(f: BasicRep) -> str:
    t = str(f.t)
    if isinstance(f, Character):
        args = [str(f.m)]
        if f.eps or f.t != ZERO:
            args.append(str(f.eps))
        if f.t != ZERO:
            args.append(t)
    elif isinstance(f, Stein):
        args = [str(2 * f.m), str(f.s)]
        if f.eps or f.t != ZERO:
            args += [str(f.eps), t]
    elif isinstance(f, Speh):
        args = [str(2 * f.m), str(f.k)]
        if f.t != ZERO:
            args.append(t)
    else:
        args = [str(4 * f.m), str(f.k), str(f.s)]
        if f.t != ZERO:
            args.append(t)
    return f"{f.kind}({','.join(args)})"


def format_rep(pi: UnitaryRep) -> str:
    return " x ".join(format_factor(f) for f in pi.factors) if pi.factors else "star"


class RepParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


_FACTOR_RE = re.compile(r"\s*(chi|stein|speh|spehcs)\s*\(([^()]*)\)\s*")


def _int_arg(arg: str, text: str, pos: int) -> int:
    a = arg.strip()
    if not a.lstrip("-").isdigit():
        raise RepParseError(f"expected an integer, got {a!r}", text, pos)
    return int(a)


def parse_rep(text: str) -> UnitaryRep:
    """Parse e.g. ``chi(3) x speh(4,2)`` or ``spehcs(8,2,s,t)``.

    ``star`` (or an empty string) is the trivial rep of G_0. Each formal
    parameter name may occur in one factor only.
    """
    src = text.strip()
    if src in ("", "star", "*"):
        return STAR
    factors: list[BasicRep] = []
    owners: dict[str, int] = {}
    pos = 0
    while True:
        m = _FACTOR_RE.match(text, pos)
        if m is None:
            bad = len(text) - len(text[pos:].lstrip())
            raise RepParseError("expected chi(...), stein(...), speh(...) or spehcs(...)", text, bad)
        kind, body = m.group(1), m.group(2)
        apos = m.start(2)
        args = [a for a in body.split(",")] if body.strip() else []
        try:
            f = _build_factor(kind, args, text, apos)
        except RepParseError:
            raise
        except ValueError as e:
            raise RepParseError(str(e), text, apos) from None
        for name in {n for attr in ("s", "t") if hasattr(f, attr) for n in getattr(f, attr).params}:
            if owners.setdefault(name, len(factors)) != len(factors):
                raise RepParseError(f"parameter {name!r} is used by two factors", text, apos)
        factors.append(f)
        pos = m.end()
        if pos >= len(text):
            break
        if text[pos] != "x":
            raise RepParseError("expected 'x' between factors", text, pos)
        pos += 1
    return UnitaryRep(tuple(factors))


def _build_factor(kind: str, args: list[str], text: str, pos: int) -> BasicRep:
    def need(lo, hi):
        if not lo <= len(args) <= hi:
            raise RepParseError(f"{kind} takes {lo} to {hi} arguments, got {len(args)}", text, pos)

    if kind == "chi":
        need(1, 3)
        m = _int_arg(args[0], text, pos)
        eps = _int_arg(args[1], text, pos) if len(args) > 1 else 0
        t = Affine.lift(args[2]) if len(args) > 2 else ZERO
        return _validate(Character(m, eps, t))
    size = _int_arg(args[0], text, pos) if args else 0
    if kind == "stein":
        if len(args) not in (2, 4):
            raise RepParseError("stein takes (2m, s) or (2m, s, eps, t)", text, pos)
        if size % 2:
            raise RepParseError("stein size must be even", text, pos)
        eps = _int_arg(args[2], text, pos) if len(args) > 2 else 0
        t = Affine.lift(args[3]) if len(args) > 3 else ZERO
        return _validate(Stein(size // 2, Affine.lift(args[1]), eps, t))
    if kind == "speh":
        need(2, 3)
        if size % 2:
            raise RepParseError("speh size must be even", text, pos)
        t = Affine.lift(args[2]) if len(args) > 2 else ZERO
        return _validate(Speh(size // 2, _int_arg(args[1], text, pos), t))
    need(3, 4)
    if size % 4:
        raise RepParseError("spehcs size must be divisible by 4", text, pos)
    t = Affine.lift(args[3]) if len(args) > 3 else ZERO
    return _validate(SpehCS(size // 4, _int_arg(args[1], text, pos), Affine.lift(args[2]), t))


# ---------------------------------------------------------------- catalog


@dataclass(frozen=True)
class Shape:
    """A basic factor with its discrete data fixed and its s, t left free."""

    kind: str
    m: int
    k: int = 0
    eps: int = 0

    @property
    def size(self) -> int:
        return {"chi": 1, "stein": 2, "speh": 2, "spehcs": 4}[self.kind] * self.m


def shapes(max_n: int, *, speh_k: Iterable[int] = (1, 2), signs: bool = True) -> list[Shape]:
    """Factor shapes of size at most max_n.

    Speh factors take k from ``speh_k``; Speh complementary series at block
    size m take every k in 1..m+1 so that k < m, k = m and k > m all occur.
    """
    eps_values = (0, 1) if signs else (0,)
    out = []
    for m in range(1, max_n + 1):
        out += [Shape("chi", m, eps=e) for e in eps_values]
        if 2 * m <= max_n:
            out += [Shape("stein", m, eps=e) for e in eps_values]
            out += [Shape("speh", m, k=k) for k in speh_k]
        if 4 * m <= max_n:
            out += [Shape("spehcs", m, k=k) for k in range(1, m + 2)]
    return out


def _instantiate(shape_list: Iterable[Shape]) -> UnitaryRep:
    factors: list[BasicRep] = []
    for i, sh in enumerate(shape_list, start=1):
        t = Affine.param(f"t{i}")
        s = Affine.param(f"s{i}")
        if sh.kind == "chi":
            factors.append(Character(sh.m, sh.eps, t))
        elif sh.kind == "stein":
            factors.append(Stein(sh.m, s, sh.eps, t))
        elif sh.kind == "speh":
            factors.append(Speh(sh.m, sh.k, t))
        else:
            factors.append(SpehCS(sh.m, sh.k, s, t))
    return UnitaryRep(tuple(factors))


def catalog(max_n: int, *, min_n: int = 1, **shape_opts) -> Iterator[UnitaryRep]:
    """Every multiset of factor shapes with total size in [min_n, max_n].

    Each factor receives its own symbolic parameters ``s<i>``, ``t<i>``.
    """
    all_shapes = shapes(max_n, **shape_opts)
    all_shapes.sort(key=lambda sh: (sh.size, sh.kind, sh.m, sh.k, sh.eps))

    def rec(start: int, remaining: int, acc: list[Shape]):
        if acc and max_n - remaining >= min_n:
            yield _instantiate(acc)
        for i in range(start, len(all_shapes)):
            sh = all_shapes[i]
            if sh.size > remaining:
                break
            acc.append(sh)
            yield from rec(i, remaining - sh.size, acc)
            acc.pop()

    yield from rec(0, max_n, [])
