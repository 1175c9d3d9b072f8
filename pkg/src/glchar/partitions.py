"""Integer partitions: conjugation, centralizer orders, n-statistic, enumeration.

A partition is stored as a weakly decreasing tuple of positive parts. The
text form is ``"2.1^3"`` (parts descending, repeated parts as exponents);
``"0"`` denotes the empty partition.
"""
from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from math import factorial

__all__ = [
    "Partition",
    "conjugate",
    "z_order",
    "add_partitions",
    "n_stat",
    "enumerate_partitions",
    "parse_partition",
]

MAX_COMBINATORIAL_N = 12


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, sorted(parts, reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        """r_d = number of parts equal to d, keyed by d ascending."""
        return dict(sorted(Counter(self).items()))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __add__(self, other):
        return add_partitions(self, Partition(other))

    def __repr__(self):
        return f"Partition({format_partition(self)!r})"

    def __str__(self):
        return format_partition(self)


def format_partition(lam) -> str:
    if not lam:
        return "0"
    out = []
    for part, mult in sorted(Counter(lam).items(), reverse=True):
        out.append(f"{part}^{mult}" if mult > 1 else f"{part}")
    return ".".join(out)


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text) -> Partition:
    """Parse ``"2.1^3"``, ``"1^3.2"``, ``"3.2"`` or ``"0"``/``""``."""
    if isinstance(text, Partition):
        return text
    if not isinstance(text, str):
        return Partition(text)
    text = text.strip()
    if text in ("", "0", "()"):
        return Partition()
    parts = []
    for tok in text.split("."):
        m = _TOKEN.match(tok.strip())
        if m is None:
            raise ValueError(f"bad partition token {tok!r} in {text!r}")
        part = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) else 1
        if part == 0:
            raise ValueError(f"zero part in {text!r}")
        parts.extend([part] * mult)
    return Partition(parts)


def conjugate(lam) -> Partition:
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= r) for r in range(1, lam[0] + 1))


def z_order(rho) -> int:
    """Order of the centralizer in S_n of a permutation of cycle type rho."""
    z = 1
    for d, r in Partition(rho).multiplicities().items():
        z *= d**r * factorial(r)
    return z


def add_partitions(rho, sigma) -> Partition:
    """Union of parts (multiplicities add)."""
    return Partition(tuple(rho) + tuple(sigma))


def n_stat(lam) -> int:
    """n(lam) = sum over columns c of binom(c, 2)."""
    return sum(c * (c - 1) // 2 for c in conjugate(lam))


@lru_cache(maxsize=None)
def _partitions_desc(n: int, max_part: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_desc(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple:
    """All partitions of n in ascending lexicographic order of the parts tuple.

    For n = 5 this is 1^5, 2.1^3, 2^2.1, 3.1^2, 3.2, 4.1, 5.
    """
    if not 0 <= n <= MAX_COMBINATORIAL_N:
        raise ValueError(f"n must be in [0, {MAX_COMBINATORIAL_N}], got {n}")
    return tuple(sorted(Partition(p) for p in _partitions_desc(n, n)))


def partitions_upto(n: int):
    for m in range(n + 1):
        yield from enumerate_partitions(m)
