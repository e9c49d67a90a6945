"""Integer partitions: enumeration, conjugation, hook lengths.

Partitions are plain tuples of positive integers in weakly decreasing
order; :class:`Partition` is a thin tuple subclass adding validation and a
few conveniences.  The empty partition ``Partition()`` has weight 0.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator

__all__ = [
    "Partition",
    "enumerate_partitions",
    "partition_count",
    "conjugate",
    "hook_lengths",
    "irrep_dimension",
    "fits_hook",
    "contains_cell",
    "ssyt_count",
    "parse_partition",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """i-th part counted from 1, zero past the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells (row, col), 1-indexed, row by row."""
        for r, length in enumerate(self, start=1):
            for c in range(1, length + 1):
                yield r, c

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"


def parse_partition(text: str) -> Partition:
    """Parse the bracketed form ``"[3,1]"`` (``"[]"`` is the empty partition)."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"malformed partition {text!r}: expected '[a,b,...]'")
    body = s[1:-1].strip()
    if not body:
        return Partition()
    try:
        parts = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return Partition(parts)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order.

    >>> [list(p) for p in enumerate_partitions(4)]
    [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions_bounded(n, n)]


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def conjugate(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def hook_lengths(lam: Iterable[int]) -> dict[tuple[int, int], int]:
    lam = Partition(lam)
    conj = conjugate(lam)
    return {(r, c): (lam[r - 1] - c) + (conj[c - 1] - r) + 1 for r, c in lam.cells()}


def irrep_dimension(lam: Iterable[int]) -> int:
    """Dimension of the irreducible representation indexed by ``lam``.

    Hook length formula; integrality is checked rather than assumed.
    """
    lam = Partition(lam)
    if not lam:
        raise ValueError("irrep_dimension needs a nonempty partition")
    num = factorial(lam.weight)
    den = prod(hook_lengths(lam).values())
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"hook length formula not integral for {lam}")
    return q


def contains_cell(lam: Iterable[int], row: int, col: int) -> bool:
    lam = Partition(lam)
    return lam.part(row) >= col


def fits_hook(lam: Iterable[int], p: int, q: int) -> bool:
    """True iff ``lam`` omits the cell (p+1, q+1), i.e. lam_{p+1} <= q."""
    return not contains_cell(lam, p + 1, q + 1)


def ssyt_count(lam: Iterable[int], m: int) -> int:
    """Number of semistandard tableaux of shape ``lam`` in letters 1..m.

    Hook-content formula; this is dim of the GL_m irreducible S_lam(C^m).
    """
    lam = Partition(lam)
    if m < 0:
        raise ValueError("m must be nonnegative")
    val = Fraction(1)
    for (r, c), h in hook_lengths(lam).items():
        val *= Fraction(m + c - r, h)
    if val.denominator != 1:
        raise ArithmeticError(f"hook-content formula not integral for {lam}, m={m}")
    return int(val)
