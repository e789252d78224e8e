"""Exact counts of number fields over Q by absolute discriminant: quadratic,
cyclic of odd prime degree via conductors, biquadratic, and ingested census data."""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO, Union

import numpy as np

from .sieves import introot, squarefree_sieve


class CensusFormatError(ValueError):
    """A census stream violates the ``degree,group,abs_disc`` format."""


# ---------------------------------------------------------------------------
# quadratic fields


def fundamental_discriminants(x: int) -> list[int]:
    """All fundamental discriminants d != 1 with |d| <= x, sorted by (|d|, sign).

    d is fundamental iff d = 1 (mod 4) and squarefree, or d = 4m with m
    squarefree and m = 2 or 3 (mod 4).
    """
    if x < 1:
        return []
    flags = squarefree_sieve(x).flags
    out = []
    for n in range(2, x + 1):
        if not flags[n]:
            continue
        if n % 4 == 1:
            out.append(n)
        elif n % 4 == 3:
            out.append(-n)
    limit4 = x // 4
    if limit4 >= 1:
        for n in range(1, limit4 + 1):
            if not flags[n]:
                continue
            if n % 4 == 1:
                out.append(-4 * n)
            elif n % 4 == 2:
                out.append(-4 * n)
                out.append(4 * n)
            else:
                out.append(4 * n)
    out.sort(key=lambda d: (abs(d), d))
    return out


def quadratic_multiplicities(xmax: int) -> np.ndarray:
    """counts[v] = number of fundamental discriminants with |d| = v, v <= xmax."""
    if xmax < 1:
        return np.zeros(2, dtype=np.int8)
    flags = squarefree_sieve(xmax).flags
    counts = np.zeros(xmax + 1, dtype=np.int8)  # values are 0, 1 or 2
    n = np.arange(xmax + 1)
    odd_case = flags & ((n % 4 == 1) | (n % 4 == 3))
    odd_case[1] = False  # d = 1 is excluded
    counts[odd_case] = 1
    m = xmax // 4
    if m >= 1:
        small = flags[: m + 1]
        r = n[: m + 1] % 4
        counts[4 * n[: m + 1][small & (r == 1)]] += 1
        counts[4 * n[: m + 1][small & (r == 2)]] += 2
        counts[4 * n[: m + 1][small & (r == 3)]] += 1
    return counts


def count_quadratic(x: int) -> int:
    """Number of quadratic fields with |disc| <= x, by sieve."""
    if x < 1:
        return 0
    return int(quadratic_multiplicities(x).sum(dtype=np.int64))


def quadratic_samples(grid: Sequence[int]) -> list[tuple[int, int]]:
    """(x, count) pairs on an ascending grid, sharing one sieve pass."""
    grid = list(grid)
    _require_ascending(grid)
    cumulative = np.cumsum(quadratic_multiplicities(max(grid)), dtype=np.int64)
    return [(x, int(cumulative[x])) for x in grid]


# ---------------------------------------------------------------------------
# cyclic fields of odd prime degree


@dataclass(frozen=True)
class ConductorEntry:
    """One admissible conductor f with its field count and discriminant f**(ell-1).

    t counts the ramified places, the wild place once when ell^2 divides f;
    the number of cyclic degree-ell fields of exact conductor f is
    (ell-1)**(t-1).
    """

    f: int
    t: int
    multiplicity: int
    disc: int


def _is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _primes_up_to(limit: int) -> list[int]:
    if limit < 2:
        return []
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return [int(p) for p in np.nonzero(flags)[0]]


def cyclic_conductors(ell: int, fmax: int) -> list[ConductorEntry]:
    """All admissible conductors f <= fmax for cyclic degree-ell fields, sorted by f.

    Admissible f: a product of distinct primes = 1 (mod ell), optionally times
    ell^2, with at least one factor.
    """
    if not _is_odd_prime(ell):
        raise ValueError(f"ell must be an odd prime, got {ell}")
    if fmax < 1:
        return []
    split_primes = [p for p in _primes_up_to(fmax) if p % ell == 1]
    wild = ell * ell
    entries: list[ConductorEntry] = []

    def record(f: int, t: int) -> None:
        entries.append(ConductorEntry(f, t, (ell - 1) ** (t - 1), f ** (ell - 1)))

    def extend(start: int, f: int, t: int) -> None:
        if t >= 1:
            record(f, t)
        if f * wild <= fmax:
            record(f * wild, t + 1)
        for i in range(start, len(split_primes)):
            nf = f * split_primes[i]
            if nf > fmax:
                break
            extend(i + 1, nf, t + 1)

    extend(0, 1, 0)
    entries.sort(key=lambda e: e.f)
    return entries


def count_cyclic_ell(ell: int, x: int) -> int:
    """Number of cyclic degree-ell fields with disc = f**(ell-1) <= x."""
    if x < 1:
        return 0
    fmax = introot(x, ell - 1)
    return sum(e.multiplicity for e in cyclic_conductors(ell, fmax))


def cyclic_tally(ell: int, xmax: int) -> "DiscriminantTally":
    """Tally of cyclic degree-ell discriminants up to xmax."""
    fmax = introot(max(xmax, 1), ell - 1)
    entries = cyclic_conductors(ell, fmax)
    return DiscriminantTally.from_pairs(
        f"C{ell}", ((e.disc, e.multiplicity) for e in entries if e.disc <= xmax)
    )


# ---------------------------------------------------------------------------
# biquadratic fields


def _kernel(d: int) -> int:
    """Signed squarefree kernel of a fundamental discriminant."""
    return d if d % 4 == 1 else d // 4


def compose_discriminants(d1: int, d2: int) -> int:
    """Fundamental discriminant of the third quadratic subfield determined by d1, d2.

    Computed on squarefree kernels, where dividing by the squared gcd is exact.
    """
    s1, s2 = _kernel(d1), _kernel(d2)
    g = math.gcd(s1, s2)
    s3 = (s1 // g) * (s2 // g)
    return s3 if s3 % 4 == 1 else 4 * s3


def biquadratic_discs(xmax: int) -> list[int]:
    """Sorted |disc| values of the biquadratic fields with |disc| <= xmax.

    Each field corresponds to one unordered triple of distinct fundamental
    discriminants closed under composition; |disc| is the product of their
    absolute values.  Triples are enumerated once via their two members of
    smallest (|d|, sign).
    """
    if xmax < 144:  # smallest triple is {-3, -4, 12}
        return []
    discs = fundamental_discriminants(math.isqrt(xmax // 3))
    out = []
    for i, d1 in enumerate(discs):
        a1 = abs(d1)
        if a1 * a1 * a1 > xmax:
            break
        for j in range(i + 1, len(discs)):
            d2 = discs[j]
            a2 = abs(d2)
            if a1 * a2 * a2 > xmax:
                break
            d3 = compose_discriminants(d1, d2)
            a3 = abs(d3)
            if (a3, d3) <= (a2, d2):
                continue  # triple already seen from its two smallest members
            product = a1 * a2 * a3
            if product <= xmax:
                out.append(product)
    out.sort()
    return out


def count_biquadratic(x: int) -> int:
    """Number of biquadratic (Klein four-group) fields with |disc| <= x."""
    if x < 1:
        return 0
    return len(biquadratic_discs(x))


def biquadratic_tally(xmax: int) -> "DiscriminantTally":
    return DiscriminantTally.from_pairs(
        "C2xC2", ((d, 1) for d in biquadratic_discs(xmax))
    )


# ---------------------------------------------------------------------------
# tallies and census ingestion


class DiscriminantTally:
    """Sorted (|disc|, multiplicity) pairs for one group label."""

    __slots__ = ("label", "entries", "_cumulative")

    def __init__(self, label: str, entries: Iterable[tuple[int, int]]):
        entries = tuple(entries)
        for (d, m) in entries:
            if d < 1 or m < 1:
                raise ValueError("abs_disc and multiplicity must be positive")
        for (d1, _), (d2, _) in zip(entries, entries[1:]):
            if d1 >= d2:
                raise ValueError("entries must be strictly increasing in abs_disc")
        self.label = label
        self.entries = entries
        cumulative = []
        total = 0
        for _, m in entries:
            total += m
            cumulative.append(total)
        self._cumulative = tuple(cumulative)

    @classmethod
    def from_pairs(cls, label: str, pairs: Iterable[tuple[int, int]]) -> "DiscriminantTally":
        """Build a tally, merging multiplicities of repeated discriminants."""
        merged: dict[int, int] = {}
        for d, m in pairs:
            merged[d] = merged.get(d, 0) + m
        return cls(label, sorted(merged.items()))

    def total(self) -> int:
        return self._cumulative[-1] if self._cumulative else 0

    def count_up_to(self, x: int) -> int:
        """Z(x): number of fields with |disc| <= x."""
        i = bisect.bisect_right(self.entries, (x, float("inf")))
        return self._cumulative[i - 1] if i else 0

    def __repr__(self) -> str:
        return f"DiscriminantTally({self.label!r}, {len(self.entries)} discriminants, Z={self.total()})"


def tally_samples(tally: DiscriminantTally, grid: Sequence[int]) -> list[tuple[int, int]]:
    """(x, Z(x)) pairs on an ascending grid."""
    grid = list(grid)
    _require_ascending(grid)
    return [(x, tally.count_up_to(x)) for x in grid]


CENSUS_HEADER = "degree,group,abs_disc"


@dataclass(frozen=True)
class CensusRecord:
    """One externally supplied field: degree, group label, |disc|."""

    degree: int
    group_label: str
    abs_disc: int


def read_census_records(stream: Union[str, TextIO, Iterable[str]]) -> list[CensusRecord]:
    """Parse a census stream into records, rejecting malformed lines by number.

    Format: first line exactly ``degree,group,abs_disc``, then comma-separated
    records with integer degree, a label without commas, and a positive
    integer absolute discriminant.
    """
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = [line.rstrip("\n") for line in stream]
    if not lines or lines[0].strip() != CENSUS_HEADER:
        raise CensusFormatError(f"line 1: header must be {CENSUS_HEADER!r}")
    records = []
    for number, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise CensusFormatError(f"line {number}: expected 3 comma-separated fields")
        degree_text, label, disc_text = (p.strip() for p in parts)
        try:
            degree = int(degree_text)
            abs_disc = int(disc_text)
        except ValueError:
            raise CensusFormatError(f"line {number}: non-integer field") from None
        if degree < 1:
            raise CensusFormatError(f"line {number}: degree must be positive")
        if abs_disc < 1:
            raise CensusFormatError(f"line {number}: abs_disc must be at least 1")
        if not label:
            raise CensusFormatError(f"line {number}: empty group label")
        records.append(CensusRecord(degree, label, abs_disc))
    return records


def ingest_census(stream: Union[str, TextIO, Iterable[str]]) -> dict[str, DiscriminantTally]:
    """Read a census of fields (one per line) and group it into tallies by label.

    Repeated (label, abs_disc) records accumulate multiplicity.
    """
    grouped: dict[str, list[tuple[int, int]]] = {}
    for record in read_census_records(stream):
        grouped.setdefault(record.group_label, []).append((record.abs_disc, 1))
    return {
        label: DiscriminantTally.from_pairs(label, pairs) for label, pairs in grouped.items()
    }


def _require_ascending(grid: Sequence[int]) -> None:
    if not grid:
        raise ValueError("grid must be nonempty")
    for a, b in zip(grid, grid[1:]):
        if b < a:
            raise ValueError("grid must be sorted ascending")
