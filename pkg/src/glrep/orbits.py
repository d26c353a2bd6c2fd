"""Nilpotent orbits of gl(n) and their dimension calculus."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .partitions import Partition, SizeMismatch, as_partition, dominates, orbit_sum, transpose


class RigidityContradiction(AssertionError):
    """The depth-rigidity hypotheses held but the conclusion did not."""


@dataclass(frozen=True)
class NilpotentOrbit:
    """The orbit O_lambda in gl(n); any composition is normalized to its partition."""

    n: int
    partition: Partition

    def __post_init__(self):
        lam = as_partition(self.partition)
        if lam.n != self.n:
            raise SizeMismatch(f"partition {tuple(lam)} has size {lam.n}, not {self.n}")
        object.__setattr__(self, "partition", lam)

    @classmethod
    def of(cls, alpha: Iterable[int]) -> "NilpotentOrbit":
        lam = as_partition(alpha)
        return cls(lam.n, lam)

    def dimension(self) -> int:
        return dimension(self.partition)

    def to_json(self) -> dict:
        return {"n": self.n, "partition": list(self.partition)}

    @classmethod
    def from_json(cls, data: dict) -> "NilpotentOrbit":
        return cls(int(data["n"]), Partition(int(p) for p in data["partition"]))


def dimension(lam: Iterable[int]) -> int:
    """n^2 minus the sum of squared column lengths."""
    lam = as_partition(lam)
    n = lam.n
    return n * n - sum(v * v for v in transpose(lam))


def dimension_by_rows(lam: Iterable[int]) -> int:
    """The row form n^2 + n - 2 sum i*lam_i; agrees with :func:`dimension` on partitions."""
    lam = tuple(lam)
    n = sum(lam)
    return n * n + n - 2 * sum(i * p for i, p in enumerate(lam, start=1))


def dimension_lower_bound(alpha: Iterable[int]) -> tuple[int, bool]:
    """Lower bound for dim O_alpha from the row form; tight iff alpha is nonincreasing."""
    alpha = tuple(alpha)
    tight = all(a >= b for a, b in zip(alpha, alpha[1:]))
    return dimension_by_rows(alpha), tight


def induce(o1: NilpotentOrbit, o2: NilpotentOrbit) -> NilpotentOrbit:
    """Induction from the Levi gl(l) x gl(m) to gl(l+m)."""
    return NilpotentOrbit(o1.n + o2.n, orbit_sum(o1.partition, o2.partition))


def dimension_gap(mu: Iterable[int], d: int) -> int:
    """dim O_(d,mu) - dim O_mu - (2n-d)(d-1), with n = |mu| + d."""
    mu = as_partition(mu)
    if d < 1:
        raise ValueError("d must be positive")
    n = mu.n + d
    return dimension((d,) + tuple(mu)) - dimension(mu) - (2 * n - d) * (d - 1)


def check_depth_rigidity(lam: Iterable[int], mu: Iterable[int], d: int) -> bool:
    """Evaluate both rigidity hypotheses for (lam, mu, d).

    Returns True iff O_(d,mu) lies in the closure of O_lam and
    dim O_lam <= dim O_mu + (2n-d)(d-1). When both hold, lam must equal
    (d, mu) with d >= mu_1; a failure of that raises RigidityContradiction.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    n = lam.n
    if d < 1 or d > n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if mu.n != n - d:
        raise SizeMismatch(f"|mu| = {mu.n} but n - d = {n - d}")
    beta = (d,) + tuple(mu)
    closure = dominates(lam, as_partition(beta))
    bound = dimension(lam) <= dimension(mu) + (2 * n - d) * (d - 1)
    if closure and bound:
        if tuple(lam) != beta:
            raise RigidityContradiction(f"hypotheses hold for lam={tuple(lam)}, beta={beta}")
    return closure and bound
