"""Named verification suites.

Each suite sweeps a finite family exhaustively (or with a seeded sampler)
and reports the number of cases checked and the first counterexample.
"""

from __future__ import annotations

import inspect
import os
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Any, Callable, Iterator

from . import infchar, matrices, orbits, reps, zelevinsky
from .partitions import as_partition, compositions, dominates, orbit_sum, partitions
from .scalars import HALF, Affine

DEFAULT_SEED = 20240601


def default_seed() -> int:
    return int(os.environ.get("GLREP_SEED", DEFAULT_SEED))


@dataclass
class SuiteResult:
    name: str
    passed: bool = True
    cases: int = 0
    counterexample: Any = None
    failures: int = 0
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    def check(self, ok: bool, case: Any) -> bool:
        """Record one case; ``case`` may be a thunk, built only on the first failure."""
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.passed:
                self.counterexample = case() if callable(case) else case
            self.passed = False
        return ok

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.name}: {self.cases} cases in {self.seconds:.2f}s"
        if not self.passed:
            out += f", {self.failures} failing, first: {self.counterexample}"
        return out

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures,
            "counterexample": self.counterexample,
            "details": self.details,
            "seconds": round(self.seconds, 3),
        }


@lru_cache(maxsize=4)
def unitary_catalog(max_n: int) -> tuple[reps.UnitaryRep, ...]:
    return tuple(reps.catalog(max_n))


def dc_equals_ap(max_n: int = 12, **_) -> SuiteResult:
    res = SuiteResult("dc-ap")
    for pi in unitary_catalog(max_n):
        dc, ap = reps.depth_composition(pi), reps.associated_partition(pi)
        res.check(tuple(dc) == tuple(ap), lambda: {"rep": str(pi), "dc": list(dc), "ap": list(ap)})
    return res


def dimension_formulas(max_n: int = 30, **_) -> SuiteResult:
    res = SuiteResult("dimension-formula")
    for n in range(max_n + 1):
        for lam in partitions(n):
            a, b = orbits.dimension(lam), orbits.dimension_by_rows(lam)
            res.check(a == b, lambda: {"partition": list(lam), "columns": a, "rows": b})
    return res


def induction_law(max_n: int = 10, **_) -> SuiteResult:
    res = SuiteResult("induction")
    parts = {n: list(partitions(n)) for n in range(max_n + 1)}
    for l, m in product(range(max_n + 1), repeat=2):
        for lam in parts[l]:
            for mu in parts[m]:
                lhs = orbits.dimension(orbit_sum(lam, mu))
                rhs = orbits.dimension(lam) + orbits.dimension(mu) + 2 * l * m
                res.check(lhs == rhs, lambda: {"lambda": list(lam), "mu": list(mu), "lhs": lhs, "rhs": rhs})
    return res


def dimension_gap_tightness(max_n: int = 15, **_) -> SuiteResult:
    res = SuiteResult("dimension-gap")
    for total in range(1, max_n + 1):
        for d in range(1, total + 1):
            for mu in partitions(total - d):
                gap = orbits.dimension_gap(mu, d)
                tight = d >= (mu[0] if mu else 0)
                res.check(gap >= 0 and (gap == 0) == tight, lambda: {"mu": list(mu), "d": d, "gap": gap})
    return res


def adduction_dimension_drop(max_n: int = 12, **_) -> SuiteResult:
    res = SuiteResult("adduction-dimension")
    for pi in unitary_catalog(max_n):
        a = reps.adduce(pi)
        n, d = pi.n, a.depth
        lhs = orbits.dimension(reps.associated_partition(pi))
        rhs = orbits.dimension(reps.associated_partition(a.rep)) + (2 * n - d) * (d - 1)
        res.check(lhs == rhs, lambda: {"rep": str(pi), "lhs": lhs, "rhs": rhs})
    return res


def casselman_osborne(max_n: int = 12, **_) -> SuiteResult:
    res = SuiteResult("casselman-osborne")
    ambiguous = 0
    for pi in unitary_catalog(max_n):
        a = reps.adduce(pi)
        report = infchar.casselman_osborne_check(pi, a)
        ambiguous += bool(a.alternates)
        res.check(
            report.passed and report.deficit == report.depth,
            lambda: {"rep": str(pi), "primary": report.primary, "alternates": list(report.alternates)},
        )
    res.details["ambiguous_entries"] = ambiguous
    return res


SPEHCS_SEARCH_EXPECTED = {(2, 1): 1, (2, 3): 1, (3, 1): 1, (3, 2): 1, (1, 1): 2, (2, 2): 2, (3, 3): 2}


def spehcs_adduction_search(cases: dict | None = None, **_) -> SuiteResult:
    """Symmetric submultisets of inf_char(spehcs(4m,k,s)) + 1/2 of size 4(m-1)
    that are realized by a unitary representation with AP = 4^(m-1)."""
    res = SuiteResult("spehcs-search")
    for (m, k), expected in (cases or SPEHCS_SEARCH_EXPECTED).items():
        start = time.perf_counter()
        psi = reps.rep(reps.SpehCS(m, k, Affine.param("s")))
        xi = infchar.inf_char(psi).shift(HALF)
        found = infchar.symmetric_submultiset_search(xi, 4 * (m - 1), ap=(4,) * (m - 1))
        a = reps.adduce(psi)
        candidates = {infchar.inf_char(r) for r in (a.rep, *a.alternates)}
        elapsed = time.perf_counter() - start
        res.details[f"{m},{k}"] = {"found": len(found), "candidates": len(candidates), "seconds": round(elapsed, 3)}
        res.check(
            len(found) == expected and set(found) <= candidates and elapsed < 1.0,
            lambda: {"m": m, "k": k, "found": len(found), "expected": expected, "distinct_candidates": len(candidates)},
        )
    return res


def padic_derivative_words(max_n: int = 8, dc_max_n: int = 10, **_) -> SuiteResult:
    res = SuiteResult("padic-derivatives")
    comps = {n: list(compositions(n)) for n in range(1, max_n + 1)}
    for mono in zelevinsky.monomials(max_n):
        x = zelevinsky.SegmentPoly.of(mono)
        wf = zelevinsky.wf_partition(mono)
        for alpha in comps[wf.n]:
            w = zelevinsky.derivative_word(x, alpha)
            ok = w >= 0 and (w == 0 or dominates(wf, as_partition(alpha)))
            res.check(ok, lambda: {"monomial": str(x), "alpha": list(alpha), "value": w})
        top = zelevinsky.derivative_word(x, wf)
        res.check(top == 1, lambda: {"monomial": str(x), "alpha": list(wf), "value": top})
    for mono in zelevinsky.monomials(dc_max_n):
        dc, wf = zelevinsky.depth_composition_padic(mono), zelevinsky.wf_partition(mono)
        res.check(tuple(dc) == tuple(wf), lambda: {"monomial": str(zelevinsky.SegmentPoly.of(mono)), "dc": list(dc)})
    return res


def derivative_homomorphism(pairs: int = 500, seed: int | None = None, **_) -> SuiteResult:
    res = SuiteResult("derivative-homomorphism")
    seed = default_seed() if seed is None else seed
    res.details["seed"] = seed
    rng = random.Random(seed)
    for _ in range(pairs):
        pool = zelevinsky.random_segment_pool(rng, 5)
        x = zelevinsky.random_poly(rng, pool)
        y = zelevinsky.random_poly(rng, pool)
        D = zelevinsky.total_derivative
        res.check(D(x * y) == D(x) * D(y), lambda: {"x": str(x), "y": str(y)})
    return res


def matrix_oracles(max_n: int = 7, **_) -> SuiteResult:
    res = SuiteResult("matrix-oracle")
    for n in range(1, max_n + 1):
        parts = list(partitions(n))
        for lam in parts:
            for mu in parts:
                a, b = dominates(lam, mu), matrices.dominance_oracle(lam, mu)
                res.check(a == b, lambda: {"lambda": list(lam), "mu": list(mu), "combinatorial": a, "matrix": b})
        for alpha in compositions(n):
            got = matrices.partition_of_nilpotent(matrices.jordan_matrix(alpha))
            res.check(got == as_partition(alpha), lambda: {"alpha": list(alpha), "partition": list(got)})
    return res


def projection_injectivity(max_n: int = 5, trials: int = 200, seed: int | None = None, **_) -> SuiteResult:
    res = SuiteResult("projection-injectivity")
    seed = default_seed() if seed is None else seed
    res.details["seed"] = seed
    for n in range(1, max_n + 1):
        for lam in partitions(n):
            report = matrices.verify_projection_injectivity(lam, trials=trials, seed=seed)
            res.details[str(lam)] = report.to_json()
            res.check(
                report.ok and report.trace_checks == report.pairs,
                lambda: {"partition": list(lam), "report": report.to_json(), "first": report.counterexamples[:1]},
            )
    return res


def howe_rank_structure(max_n: int = 12, **_) -> SuiteResult:
    res = SuiteResult("howe-rank")
    for pi in unitary_catalog(max_n):
        n, ap = pi.n, reps.associated_partition(pi)
        h = reps.howe_rank(pi)
        res.check(h == min(n // 2, n - len(ap)), lambda: {"rep": str(pi), "howe": h})
        r = reps.rank(pi)
        for k in range(0, (n + 1) // 2):
            res.check((r == k) == reps.is_small_by_structure(pi, k), lambda: {"rep": str(pi), "rank": r, "k": k})
    return res


SUITES: dict[str, tuple[str, Callable[..., SuiteResult]]] = {
    "dc-ap": ("depth composition equals associated partition on the unitary catalog", dc_equals_ap),
    "dimension-formula": ("row and column orbit dimension formulas agree", dimension_formulas),
    "induction": ("orbit dimension is additive under induction up to 2lm", induction_law),
    "dimension-gap": ("the dimension gap vanishes exactly when d >= mu_1", dimension_gap_tightness),
    "adduction-dimension": ("AP dimension drops by (2n-d)(d-1) under adduction", adduction_dimension_drop),
    "casselman-osborne": ("adduced infinitesimal character shifted by -1/2 is contained", casselman_osborne),
    "spehcs-search": ("symmetric submultiset search recovers the adduced candidates", spehcs_adduction_search),
    "padic-derivatives": ("p-adic derivative words and depth compositions", padic_derivative_words),
    "derivative-homomorphism": ("the total derivative is multiplicative", derivative_homomorphism),
    "matrix-oracle": ("matrix rank oracles agree with the combinatorics", matrix_oracles),
    "projection-injectivity": ("the mirabolic projection is injective on U", projection_injectivity),
    "howe-rank": ("Howe rank and small representations on the catalog", howe_rank_structure),
}


def default_max_n(name: str) -> int | None:
    param = inspect.signature(SUITES[name][1]).parameters.get("max_n")
    return None if param is None else param.default


def run_suite(name: str, max_n: int | None = None, seed: int | None = None, cap: bool = False) -> SuiteResult:
    """Run one suite. With ``cap`` the suite's own default size is an upper bound for max_n."""
    if name not in SUITES:
        raise KeyError(name)
    fn = SUITES[name][1]
    kwargs: dict = {}
    default = default_max_n(name)
    if max_n is not None and default is not None:
        kwargs["max_n"] = min(max_n, default) if cap else max_n
    if seed is not None:
        kwargs["seed"] = seed
    start = time.perf_counter()
    res = fn(**kwargs)
    res.seconds = time.perf_counter() - start
    return res


def run_all(max_n: int | None = None, seed: int | None = None) -> Iterator[SuiteResult]:
    for name in SUITES:
        yield run_suite(name, max_n, seed, cap=True)
