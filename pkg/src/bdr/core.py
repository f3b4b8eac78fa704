"""Fundamental types, parsing, and graphicality testing.

Degree sequences are immutable value objects.  All comparisons against the
relative degree bounds (c1, c2) are done with exact rationals so that
boundary instances are classified correctly.
"""

from __future__ import annotations

import re
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError

_TOKEN_SPLIT = re.compile(r"[,\s]+")


@dataclass(frozen=True)
class DegreeSequence:
    """A multiset of nonnegative integer degrees, in input order."""

    degrees: tuple[int, ...]

    def __init__(self, degrees):
        degrees = tuple(int(d) for d in degrees)
        for d in degrees:
            if d < 0:
                raise ValueError(f"negative degree {d}")
        object.__setattr__(self, "degrees", degrees)

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def sigma(self) -> int:
        return sum(self.degrees)

    def sorted_desc(self) -> tuple[int, ...]:
        """Canonical non-increasing copy; the original order is kept."""
        return tuple(sorted(self.degrees, reverse=True))

    def nonzero(self) -> tuple[int, ...]:
        return tuple(d for d in self.degrees if d > 0)

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return len(self.degrees)


@dataclass(frozen=True)
class DegreeClass:
    """The set of degree sequences of length n, sum sigma, degrees in [d, delta]."""

    n: int
    sigma: int
    d: int
    delta: int

    def __post_init__(self):
        if self.n < 0 or self.sigma < 0:
            raise ValueError("n and sigma must be nonnegative")
        if not 0 <= self.d <= self.delta:
            raise ValueError(f"need 0 <= d <= delta, got d={self.d}, delta={self.delta}")

    @property
    def is_empty(self) -> bool:
        return not self.n * self.d <= self.sigma <= self.n * self.delta


@dataclass(frozen=True)
class ParamBounds:
    """Relative degree bounds: every degree must lie in [c1*n, c2*n]."""

    c1: Fraction
    c2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c1", Fraction(self.c1))
        object.__setattr__(self, "c2", Fraction(self.c2))
        if not 0 <= self.c1 <= self.c2 <= 1:
            raise ValueError(f"need 0 <= c1 <= c2 <= 1, got c1={self.c1}, c2={self.c2}")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or a terminating decimal, exactly (no float round-trip)."""
    text = text.strip()
    if not text:
        raise ParseError("empty rational")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from exc


def parse_sequence(text: str) -> DegreeSequence:
    """Parse whitespace- or comma-separated nonnegative integers."""
    tokens = [t for t in _TOKEN_SPLIT.split(text.strip()) if t]
    if not tokens:
        raise ParseError("empty degree sequence")
    degrees = []
    for tok in tokens:
        try:
            value = int(tok)
        except ValueError as exc:
            raise ParseError(f"non-integer token {tok!r}") from exc
        if value < 0:
            raise ParseError(f"negative degree {tok!r}")
        degrees.append(value)
    return DegreeSequence(degrees)


def _erdos_gallai_holds(deg: tuple[int, ...], k: int, prefix: list[int], suffix: list[int]) -> bool:
    # deg sorted non-increasing, 1-based k.  RHS = k(k-1) + sum_{j>k} min(k, d_j).
    n = len(deg)
    # first index >= k (0-based) in deg[k:] whose value is <= k
    idx = bisect_left(deg, -k, lo=k, hi=n, key=lambda v: -v)
    rhs = k * (k - 1) + (idx - k) * k + (suffix[idx])
    return prefix[k] <= rhs


def is_graphic(ds: DegreeSequence, *, check_all_k: bool = False) -> bool:
    """Erdős–Gallai test.

    By default only the drop points (k with d_k > d_{k+1}) plus k = n are
    checked; ``check_all_k`` runs every k for differential testing.
    """
    deg = ds.sorted_desc()
    n = len(deg)
    if n == 0:
        return True
    if sum(deg) % 2 != 0:
        return False
    if deg[0] == 0:
        return True
    prefix = [0] * (n + 1)
    for i, d in enumerate(deg):
        prefix[i + 1] = prefix[i] + d
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + deg[i]
    if check_all_k:
        ks = range(1, n + 1)
    else:
        ks = [k for k in range(1, n) if deg[k - 1] > deg[k]] + [n]
    return all(_erdos_gallai_holds(deg, k, prefix, suffix) for k in ks)


def in_class(ds: DegreeSequence, bounds: ParamBounds) -> bool:
    """Exact check that every degree lies in [c1*n, c2*n]."""
    n = ds.n
    lo = bounds.c1 * n
    hi = bounds.c2 * n
    return all(lo <= d <= hi for d in ds.degrees)
