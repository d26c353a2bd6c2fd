"""Affine forms over named formal parameters, and complex scalars built from them.

Parameters are treated as algebraically independent, so equality is
coefficient-wise. Names are free-form identifiers; by convention ``s*``
names range over (0, 1/2) and ``t*`` names over the reals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

Number = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class Affine:
    const: Fraction = Fraction(0)
    coeffs: tuple[tuple[str, Fraction], ...] = ()

    def __post_init__(self):
        if type(self.const) is not Fraction:
            object.__setattr__(self, "const", Fraction(self.const))
        if not self.coeffs:
            return
        merged: dict[str, Fraction] = {}
        for name, c in self.coeffs:
            merged[name] = merged.get(name, Fraction(0)) + Fraction(c)
        object.__setattr__(self, "coeffs", tuple(sorted((k, v) for k, v in merged.items() if v != 0)))

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.const, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    @classmethod
    def param(cls, name: str, coeff: Number = 1) -> "Affine":
        return _param(name, Fraction(coeff))

    @classmethod
    def lift(cls, x: "Affine | Number | str") -> "Affine":
        if isinstance(x, Affine):
            return x
        if isinstance(x, str):
            return parse_affine(x)
        return cls(Fraction(x))

    @property
    def params(self) -> dict[str, Fraction]:
        return dict(self.coeffs)

    @property
    def is_constant(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        other = Affine.lift(other)
        return Affine(self.const + other.const, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self):
        return Affine(-self.const, tuple((k, -v) for k, v in self.coeffs))

    def __sub__(self, other):
        return self + (-Affine.lift(other))

    def __rsub__(self, other):
        return Affine.lift(other) - self

    def __mul__(self, c: Number):
        c = Fraction(c)
        return Affine(self.const * c, tuple((k, v * c) for k, v in self.coeffs))

    __rmul__ = __mul__

    def range_over_box(self, low: Number = 0, high: Number = Fraction(1, 2)) -> tuple[Fraction, Fraction]:
        """Infimum and supremum when every parameter ranges over (low, high)."""
        lo = hi = self.const
        for _, c in self.coeffs:
            a, b = c * low, c * high
            lo += min(a, b)
            hi += max(a, b)
        return lo, hi

    def __str__(self):
        return format_affine(self)

    def to_json(self) -> dict:
        return {"const": str(self.const), "params": {k: str(v) for k, v in self.coeffs}}

    @classmethod
    def from_json(cls, data: Mapping) -> "Affine":
        return cls(Fraction(data["const"]), tuple((k, Fraction(v)) for k, v in data.get("params", {}).items()))


@lru_cache(maxsize=4096)
def _param(name: str, coeff: Fraction) -> Affine:
    return Affine(Fraction(0), ((name, coeff),))


ZERO = Affine()
HALF = Affine(Fraction(1, 2))


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_affine(a: Affine) -> str:
    pieces: list[tuple[Fraction, str]] = []
    if a.const != 0 or not a.coeffs:
        pieces.append((a.const, _fmt_coeff(abs(a.const))))
    for name, c in a.coeffs:
        mag = abs(c)
        pieces.append((c, name if mag == 1 else f"{_fmt_coeff(mag)}*{name}"))
    out = ""
    for i, (sign, body) in enumerate(pieces):
        if i == 0:
            out = ("-" if sign < 0 else "") + body
        else:
            out += (" - " if sign < 0 else " + ") + body
    return out


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*([A-Za-z_][A-Za-z0-9_]*)?|([A-Za-z_][A-Za-z0-9_]*))\s*"
)


def parse_affine(text: str) -> Affine:
    """Parse ``1/2 - s``, ``-t1``, ``3*t + 1``, ``0`` and similar."""
    pos = 0
    const = Fraction(0)
    coeffs: list[tuple[str, Fraction]] = []
    src = text.strip()
    if not src:
        raise ValueError("empty affine expression")
    first = True
    while pos < len(src):
        m = _TERM.match(src, pos)
        if m is None or m.end() == pos or (not first and m.group(1) is None):
            raise ValueError(f"cannot parse affine expression {text!r} at position {pos}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(4):
            coeffs.append((m.group(4), Fraction(sign)))
        elif m.group(3):
            coeffs.append((m.group(3), sign * Fraction(m.group(2))))
        else:
            const += sign * Fraction(m.group(2))
        pos = m.end()
        first = False
    return Affine(const, tuple(coeffs))


@dataclass(frozen=True, order=True)
class ExactScalar:
    """A complex number re + i*im with affine real and imaginary parts."""

    re: Affine = ZERO
    im: Affine = ZERO

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.re, self.im))
            object.__setattr__(self, "_hash", h)
        return h

    @classmethod
    def of(cls, re: "Affine | Number | str" = 0, im: "Affine | Number | str" = 0) -> "ExactScalar":
        return cls(Affine.lift(re), Affine.lift(im))

    def __add__(self, other):
        if not isinstance(other, ExactScalar):
            other = ExactScalar.of(other)
        return ExactScalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        if not isinstance(other, ExactScalar):
            other = ExactScalar.of(other)
        return ExactScalar(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return ExactScalar(-self.re, -self.im)

    def negation_bar(self) -> "ExactScalar":
        """z -> -conj(z), valid when every parameter is real."""
        return ExactScalar(-self.re, self.im)

    @property
    def is_imaginary(self) -> bool:
        return self.re == ZERO

    def __str__(self):
        if self.im == ZERO:
            return str(self.re)
        if self.re == ZERO:
            return f"i({self.im})"
        return f"{self.re} + i({self.im})"

    def to_json(self) -> dict:
        return {"re": self.re.to_json(), "im": self.im.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "ExactScalar":
        return cls(Affine.from_json(data["re"]), Affine.from_json(data["im"]))
