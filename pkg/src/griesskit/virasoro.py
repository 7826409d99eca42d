"""Unitary Virasoro series: central charges, highest weights, fusion, Miyamoto signs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

Sector = Tuple[int, int]


class IndexOutOfRange(ValueError):
    pass


class NotSigmaSector(ValueError):
    pass


def central_charge(n: int) -> Fraction:
    """c_n = 1 - 6/((n+2)(n+3))."""
    if n < 1:
        raise IndexOutOfRange(f"series index must be >= 1, got {n}")
    return 1 - Fraction(6, (n + 2) * (n + 3))


def _check(n: int, r: int, s: int) -> None:
    if n < 1 or not (1 <= r <= n + 1) or not (1 <= s <= n + 2):
        raise IndexOutOfRange(f"(r, s) = ({r}, {s}) out of range for n = {n}")


def highest_weight(n: int, r: int, s: int) -> Fraction:
    _check(n, r, s)
    return Fraction((r * (n + 3) - s * (n + 2)) ** 2 - 1, 4 * (n + 2) * (n + 3))


def canonical(n: int, sector: Sector) -> Sector:
    """Representative of ``(r, s) ~ (n+2-r, n+3-s)`` with ``r <= (n+2)/2``.

    On the fixed line ``2r == n+2`` the smaller ``s`` wins.
    """
    r, s = sector
    _check(n, r, s)
    r2, s2 = n + 2 - r, n + 3 - s
    if 2 * r < n + 2:
        return (r, s)
    if 2 * r > n + 2:
        return (r2, s2)
    return (r, min(s, s2))


def sectors(n: int) -> List[Sector]:
    """Canonical sector labels of series ``n``, one per irreducible module."""
    seen = []
    for r in range(1, n + 2):
        for s in range(1, n + 3):
            c = canonical(n, (r, s))
            if c not in seen:
                seen.append(c)
    return sorted(seen)


def fuse(n: int, a: Sector, b: Sector) -> List[Sector]:
    """Raw fusion product as a list (multiset) of ``(r, s)`` pairs."""
    (r1, s1), (r2, s2) = a, b
    _check(n, r1, s1)
    _check(n, r2, s2)
    M = min(r1, r2, n + 2 - r1, n + 2 - r2)
    N = min(s1, s2, n + 3 - s1, n + 3 - s2)
    return [
        (abs(r1 - r2) + 2 * i - 1, abs(s1 - s2) + 2 * j - 1)
        for i in range(1, M + 1)
        for j in range(1, N + 1)
    ]


def fuse_canonical(n: int, a: Sector, b: Sector) -> Counter:
    return Counter(canonical(n, p) for p in fuse(n, a, b))


def tau_sign(n: int, sector: Sector) -> int:
    r, s = sector
    _check(n, r, s)
    e = r + 1 if n % 2 == 0 else s + 1
    return -1 if e % 2 else 1


def _sigma_form(n: int, sector: Sector) -> Sector | None:
    r, s = sector
    _check(n, r, s)
    for rr, ss in ((r, s), (n + 2 - r, n + 3 - s)):
        if n % 2 == 0 and rr == 1:
            return (rr, ss)
        if n % 2 == 1 and ss == 1:
            return (rr, ss)
    return None


def in_sigma_sectors(n: int, sector: Sector) -> bool:
    return _sigma_form(n, sector) is not None


def sigma_sign(n: int, sector: Sector) -> int:
    form = _sigma_form(n, sector)
    if form is None:
        raise NotSigmaSector(f"{sector} is not in the sigma sector set for n = {n}")
    r, s = form
    e = s + 1 if n % 2 == 0 else r + 1
    return -1 if e % 2 else 1


@dataclass(frozen=True)
class UnitaryCharge:
    n: int
    c: Fraction = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "c", central_charge(self.n))


@dataclass(frozen=True)
class HighestWeight:
    n: int
    r: int
    s: int
    h: Fraction = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "h", highest_weight(self.n, self.r, self.s))


@dataclass(frozen=True)
class SigmaSectorSet:
    n: int
    weights: frozenset = field(init=False)

    def __post_init__(self):
        n = self.n
        if n % 2 == 0:
            hs = {highest_weight(n, 1, s) for s in range(1, n + 3)}
        else:
            hs = {highest_weight(n, r, 1) for r in range(1, n + 2)}
        object.__setattr__(self, "weights", frozenset(hs))


def series_table(n: int) -> dict:
    """JSON-ready summary: central charge, h-table and canonical fusion table."""
    secs = sectors(n)
    fusion = {}
    for i, a in enumerate(secs):
        for b in secs[i:]:
            prod = fuse_canonical(n, a, b)
            fusion[f"{a[0]},{a[1]}x{b[0]},{b[1]}"] = {
                f"{r},{s}": m for (r, s), m in sorted(prod.items())
            }
    return {
        "n": n,
        "c": str(central_charge(n)),
        "h": {f"{r},{s}": str(highest_weight(n, r, s)) for r, s in secs},
        "tau": {f"{r},{s}": tau_sign(n, (r, s)) for r, s in secs},
        "fusion": fusion,
    }
