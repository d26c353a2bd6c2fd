"""Exact rational matrices: Jordan matrices, ranks of powers, and the mirabolic
projection harness."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .partitions import Partition, SizeMismatch, as_partition, transpose


class NotNilpotent(ValueError):
    pass


class RationalMatrix:
    """Immutable dense matrix over Q."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable]):
        rows = tuple(tuple(Fraction(x) for x in row) for row in data)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        self._data = rows
        self.rows = len(rows)
        self.cols = width

    @classmethod
    def zero(cls, rows: int, cols: int | None = None) -> "RationalMatrix":
        return cls([[0] * (rows if cols is None else cols) for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        return f"RationalMatrix({[[str(x) for x in r] for r in self._data]})"

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RationalMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "RationalMatrix":
        c = Fraction(c)
        return RationalMatrix([[c * a for a in r] for r in self._data])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other._data))
        return RationalMatrix(
            [[sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols] for r in self._data]
        )

    def __pow__(self, k: int) -> "RationalMatrix":
        if not self.is_square or k < 0:
            raise ValueError("power needs a square matrix and k >= 0")
        out = RationalMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum((self._data[i][i] for i in range(self.rows)), Fraction(0))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def rank(self) -> int:
        return rank(self._data)

    def inverse(self) -> "RationalMatrix":
        n = self.rows
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self._data)]
        for c in range(n):
            piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            aug[c], aug[piv] = aug[piv], aug[c]
            p = aug[c][c]
            aug[c] = [x / p for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c] != 0:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return RationalMatrix([r[n:] for r in aug])

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self._data]

    @classmethod
    def from_json(cls, data: Sequence[Sequence]) -> "RationalMatrix":
        return cls([[Fraction(x) if isinstance(x, str) else Fraction(x) for x in r] for r in data])


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank by fraction-free (Bareiss) elimination after clearing row denominators."""
    m = []
    for r in rows:
        den = lcm(*(Fraction(x).denominator for x in r)) if r else 1
        m.append([int(Fraction(x) * den) for x in r])
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rk = 0
    prev = 1
    for c in range(ncols):
        piv = next((r for r in range(rk, nrows) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        p = m[rk][c]
        for r in range(rk + 1, nrows):
            a = m[r][c]
            m[r] = [(p * x - a * y) // prev for x, y in zip(m[r], m[rk])]
        prev = p
        rk += 1
        if rk == nrows:
            break
    return rk


def jordan_matrix(alpha: Iterable[int]) -> RationalMatrix:
    """Nilpotent Jordan matrix with blocks alpha_1, ..., alpha_k down the diagonal."""
    alpha = tuple(alpha)
    n = sum(alpha)
    if n == 0:
        raise ValueError("empty composition has no matrix")
    ends = set()
    acc = 0
    for a in alpha:
        acc += a
        ends.add(acc)
    return RationalMatrix(
        [[int(j == i + 1 and i not in ends) for j in range(1, n + 1)] for i in range(1, n + 1)]
    )


def power_ranks(x: RationalMatrix) -> list[int]:
    """[rank X^0, rank X^1, ..., rank X^n]."""
    out = [x.rows]
    p = RationalMatrix.identity(x.rows)
    for _ in range(x.rows):
        p = p @ x
        out.append(p.rank())
    return out


def partition_of_nilpotent(x: RationalMatrix) -> Partition:
    """Jordan type of a nilpotent matrix from the ranks of its powers."""
    if not x.is_square:
        raise ValueError("nilpotent matrices are square")
    ranks = power_ranks(x)
    if ranks[-1] != 0:
        raise NotNilpotent("matrix is not nilpotent: X^n != 0")
    nu = [ranks[j - 1] - ranks[j] for j in range(1, len(ranks))]
    return transpose(v for v in nu if v > 0)


def jordan_power_rank(lam: Iterable[int], k: int) -> int:
    """Closed form rank(J_lam^k) = sum_i max(lam_i - k, 0)."""
    return sum(max(p - k, 0) for p in lam)


def dominance_oracle(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """Closure order via ranks of powers of Jordan matrices."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.n != mu.n:
        raise SizeMismatch(f"|{tuple(lam)}| != |{tuple(mu)}|")
    if lam.n == 0:
        return True
    rl = power_ranks(jordan_matrix(lam))
    rm = power_ranks(jordan_matrix(mu))
    return all(b <= a for a, b in zip(rl[1:], rm[1:]))


def trace_form(x: RationalMatrix, y: RationalMatrix) -> Fraction:
    if not (x.is_square and y.is_square and x.rows == y.rows):
        raise ValueError("trace form needs square matrices of equal size")
    return (x @ y).trace()


def elementary(n: int, i: int, j: int) -> RationalMatrix:
    return RationalMatrix([[int(r == i and c == j) for c in range(n)] for r in range(n)])


def random_rational(rng: random.Random, bound: int = 3, max_den: int = 3) -> Fraction:
    """Uniform-ish small-denominator rational in [-bound, bound]."""
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(-bound * den, bound * den), den)


def random_invertible(n: int, rng: random.Random) -> RationalMatrix:
    while True:
        g = RationalMatrix([[random_rational(rng) for _ in range(n)] for _ in range(n)])
        if g.rank() == n:
            return g


def project_mirabolic(a: RationalMatrix) -> RationalMatrix:
    """Replace the last column by zero (the projection to the mirabolic dual)."""
    return RationalMatrix([list(r[:-1]) + [0] for r in a.tolist()])


def _last_row_nonzero(x: RationalMatrix) -> bool:
    return any(v != 0 for v in x.row(x.rows - 1))


@dataclass
class GeoReport:
    partition: tuple[int, ...]
    seed: int
    trials: int = 0
    u_hits: int = 0
    pairs: int = 0
    nilpotent_pairs: int = 0
    violations: int = 0
    trace_checks: int = 0
    trace_failures: int = 0
    counterexamples: list = field(default_factory=list)

    def merge(self, other: "GeoReport") -> "GeoReport":
        out = GeoReport(self.partition, self.seed)
        for name in ("trials", "u_hits", "pairs", "nilpotent_pairs", "violations", "trace_checks", "trace_failures"):
            setattr(out, name, getattr(self, name) + getattr(other, name))
        out.counterexamples = self.counterexamples + other.counterexamples
        return out

    @property
    def ok(self) -> bool:
        return self.violations == 0 and self.trace_failures == 0

    def to_json(self) -> dict:
        return {
            "partition": list(self.partition),
            "trials": self.trials,
            "u_hits": self.u_hits,
            "violations": self.violations,
            "seed": self.seed,
            "pairs": self.pairs,
            "nilpotent_pairs": self.nilpotent_pairs,
            "trace_checks": self.trace_checks,
            "trace_failures": self.trace_failures,
        }


def _grid_vectors(n: int, values=(-1, 0, 1)) -> list[list[Fraction]]:
    out = [[]]
    for _ in range(n):
        out = [v + [Fraction(x)] for v in out for x in values]
    return [v for v in out if any(v)]


def verify_projection_injectivity(
    lam: Iterable[int], trials: int = 200, seed: int = 0, vectors_per_hit: int = 2
) -> GeoReport:
    """Falsification harness for injectivity of the mirabolic projection on U.

    Each trial conjugates J_lam by a random rational g. When A lies in
    U = {A : e_n' A^(k-1) != 0}, columns v != 0 are drawn and B = A + v e_n'
    is formed, so pr(A) = pr(B). A violation is a B that is again in U.
    Half of the v have e_n'v = 0 so that Tr B = 0 (when n > 1). For n <= 3 every v with
    entries in {-1, 0, 1} is tried as well. The identity
    Tr B = Tr A + e_n'v is checked on every pair.
    """
    lam = as_partition(lam)
    if not lam:
        raise ValueError("partition must be nonempty")
    n, k = lam.n, lam[0]
    rng = random.Random(seed)
    report = GeoReport(tuple(lam), seed)
    j = jordan_matrix(lam)
    grid = _grid_vectors(n) if n <= 3 else []
    for _ in range(trials):
        report.trials += 1
        g = random_invertible(n, rng)
        a = g @ j @ g.inverse()
        if not _last_row_nonzero(a ** (k - 1)):
            continue
        report.u_hits += 1
        vs = []
        for i in range(vectors_per_hit):
            while True:
                v = [random_rational(rng) for _ in range(n)]
                if i % 2 == 1 and n > 1:
                    v[-1] = Fraction(0)
                if any(v):
                    break
            vs.append(v)
        for v in vs + grid:
            _check_pair(a, v, lam, k, report)
    return report


def _check_pair(a: RationalMatrix, v: list[Fraction], lam: Partition, k: int, report: GeoReport) -> None:
    b = RationalMatrix([list(r[:-1]) + [r[-1] + v[i]] for i, r in enumerate(a.tolist())])
    report.pairs += 1
    assert project_mirabolic(a) == project_mirabolic(b)
    report.trace_checks += 1
    if b.trace() != a.trace() + v[-1]:
        report.trace_failures += 1
        report.counterexamples.append({"kind": "trace", "A": a.to_json(), "v": [str(x) for x in v]})
    if b.trace() != 0:
        return
    try:
        mu = partition_of_nilpotent(b)
    except NotNilpotent:
        return
    report.nilpotent_pairs += 1
    if mu == lam and _last_row_nonzero(b ** (k - 1)):
        report.violations += 1
        report.counterexamples.append({"kind": "injectivity", "A": a.to_json(), "v": [str(x) for x in v]})
