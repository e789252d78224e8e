"""Integer sieves: squarefree flags, k-powerful counting, divisor tables, and a
Dirichlet partial-sum probe."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class SieveTable:
    """Indicator flags over 1..limit; index 0 is unused and False."""

    kind: str
    limit: int
    flags: np.ndarray

    def count(self) -> int:
        return int(self.flags[1:].sum())


def squarefree_sieve(limit: int) -> SieveTable:
    """Flags n <= limit with no square divisor, by striking d^2 multiples."""
    if limit < 1:
        raise ValueError("limit must be positive")
    flags = np.ones(limit + 1, dtype=bool)
    flags[0] = False
    for d in range(2, math.isqrt(limit) + 1):
        flags[d * d :: d * d] = False
    return SieveTable("squarefree", limit, flags)


def introot(x: int, k: int) -> int:
    """Largest integer r with r**k <= x (exact integer arithmetic)."""
    if x < 0 or k < 1:
        raise ValueError("x must be nonnegative and k positive")
    if x == 0:
        return 0
    if k == 1:
        return x
    if k == 2:
        return math.isqrt(x)
    r = int(round(x ** (1.0 / k)))
    while r > 0 and r**k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def _powerful_parts(k: int, x: int, squarefree: np.ndarray):
    """Yield all products prod = c_{k+1}^{k+1} * ... * c_{2k-1}^{2k-1} <= x with the
    c_j squarefree and pairwise coprime.

    Every k-powerful integer factors uniquely as b^k times such a product, so
    the enumeration needs no deduplication.
    """
    exps = list(range(k + 1, 2 * k))

    def rec(idx: int, prod: int, used: tuple[int, ...]):
        if idx == len(exps):
            yield prod
            return
        j = exps[idx]
        c = 1
        while prod * c**j <= x:
            if squarefree[c] and all(math.gcd(c, u) == 1 for u in used):
                yield from rec(idx + 1, prod * c**j, used + (c,))
            c += 1

    yield from rec(0, 1, ())


def powerful_count(k: int, x: int) -> int:
    """Number of n <= x whose primes all occur with exponent >= k.

    Sublinear in x: sums floor(x / prod)^(1/k) over the squarefree coprime
    part enumeration, exactly and without factoring each n.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if x < 1:
        return 0
    if k == 1:
        return x
    squarefree = squarefree_sieve(max(introot(x, k + 1), 1)).flags
    return sum(introot(x // prod, k) for prod in _powerful_parts(k, x, squarefree))


def powerful_numbers(k: int, x: int) -> list[int]:
    """Sorted list of the k-powerful integers <= x."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if x < 1:
        return []
    if k == 1:
        return list(range(1, x + 1))
    squarefree = squarefree_sieve(max(introot(x, k + 1), 1)).flags
    out = []
    for prod in _powerful_parts(k, x, squarefree):
        b = 1
        while prod * b**k <= x:
            out.append(prod * b**k)
            b += 1
    out.sort()
    return out


def powerful_sieve(k: int, limit: int) -> SieveTable:
    """Indicator table of the k-powerful integers up to limit."""
    if limit < 1:
        raise ValueError("limit must be positive")
    flags = np.zeros(limit + 1, dtype=bool)
    flags[powerful_numbers(k, limit)] = True
    return SieveTable(f"{k}-powerful", limit, flags)


def divisor_counts(limit: int) -> np.ndarray:
    """t[n] = number of positive divisors of n, for n = 1..limit (t[0] = 0)."""
    if limit < 1:
        raise ValueError("limit must be positive")
    t = np.zeros(limit + 1, dtype=np.int32)
    for d in range(1, limit + 1):
        t[d::d] += 1
    return t


@dataclass(frozen=True)
class DivisorBoundReport:
    max_ratio: float
    bound: float
    holds: bool


def divisor_bound_check(limit: int, epsilon: float) -> DivisorBoundReport:
    """Compare max of t(n)/n^epsilon over n <= limit with exp(2^(1/eps)/(eps log 2))."""
    eps = float(epsilon)
    if limit < 1 or eps <= 0:
        raise ValueError("limit must be positive and epsilon > 0")
    t = divisor_counts(limit)
    n = np.arange(limit + 1, dtype=np.float64)
    max_ratio = float((t[1:] / n[1:] ** eps).max())
    with np.errstate(over="ignore"):
        bound = float(np.exp(2.0 ** (1.0 / eps) / (eps * math.log(2.0))))
    return DivisorBoundReport(max_ratio, bound, max_ratio <= bound)


@dataclass(frozen=True)
class TailProbeReport:
    """Partial sums of sum a_n / n^s at the cutoffs, with increment diagnostics.

    A shrinking max increment is numeric evidence of convergence for s > r,
    not a proof.  coefficient_bound is the observed max of (partial sums of
    a_n) / x^r over the coefficient range.
    """

    s: float
    r: float
    cutoffs: tuple[int, ...]
    partial_sums: tuple[float, ...]
    increments: tuple[float, ...]
    max_increment: float
    coefficient_bound: float


def dirichlet_tail_probe(
    coeffs: Sequence[float], r: float, s: float, grid: Sequence[int]
) -> TailProbeReport:
    """Probe convergence of sum a_n / n^s given partial sums of a_n growing like x^r."""
    if s <= r:
        raise ValueError(f"s must exceed r (got s={s}, r={r})")
    a = np.asarray(coeffs, dtype=np.float64)
    if a.size == 0 or (a < 0).any():
        raise ValueError("coefficients must be nonnegative and nonempty")
    cutoffs = [int(x) for x in grid]
    if not cutoffs or any(c < 1 or c > a.size for c in cutoffs):
        raise ValueError("cutoffs must lie in 1..len(coeffs)")
    if any(b < c for b, c in zip(cutoffs[1:], cutoffs)):
        raise ValueError("cutoffs must be ascending")
    n = np.arange(1, a.size + 1, dtype=np.float64)
    coefficient_bound = float((np.cumsum(a) / n**r).max())
    terms = np.cumsum(a / n**s)
    partial = tuple(float(terms[c - 1]) for c in cutoffs)
    increments = tuple(b - c for b, c in zip(partial[1:], partial))
    max_increment = max(increments, default=0.0)
    return TailProbeReport(
        s=float(s),
        r=float(r),
        cutoffs=tuple(cutoffs),
        partial_sums=partial,
        increments=increments,
        max_increment=max_increment,
        coefficient_bound=coefficient_bound,
    )
