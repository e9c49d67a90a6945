"""Schur functors on split super-objects.

An object is modelled by its super-dimension ``(p|q)``: a p-dimensional even
part plus a q-dimensional odd part.  ``S_lam(p|q)`` is computed by counting
(p, q)-hook tableaux of shape lam, with parity given by the number of cells
holding a primed (odd) letter.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .partitions import Partition, conjugate, enumerate_partitions, fits_hook, ssyt_count
from .symmetric_group import centralizer_order, character, lr_coefficient

__all__ = [
    "SuperDim",
    "KimStats",
    "DEFAULT_MAX_WEIGHT",
    "hook_tableaux",
    "schur_dims",
    "schur_sdim_character",
    "schur_total_dim_character",
    "hook_split_total",
    "power_dims",
    "kim_stats",
    "tensor",
    "direct_sum",
]

DEFAULT_MAX_WEIGHT = 12


@dataclass(frozen=True, order=True)
class SuperDim:
    even: int = 0
    odd: int = 0

    def __post_init__(self):
        if self.even < 0 or self.odd < 0:
            raise ValueError(f"super-dimension entries must be nonnegative: ({self.even}|{self.odd})")

    @property
    def kim(self) -> int:
        return self.even + self.odd

    @property
    def euler(self) -> int:
        return self.even - self.odd

    @property
    def is_zero(self) -> bool:
        return self.even == 0 and self.odd == 0

    def __add__(self, other: "SuperDim") -> "SuperDim":
        return direct_sum(self, other)

    def __mul__(self, other):
        if isinstance(other, SuperDim):
            return tensor(self, other)
        if isinstance(other, int) and other >= 0:
            return SuperDim(self.even * other, self.odd * other)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"({self.even}|{self.odd})"

    @classmethod
    def parse(cls, text: str) -> "SuperDim":
        m = re.fullmatch(r"\s*\(\s*(\d+)\s*\|\s*(\d+)\s*\)\s*", text)
        if not m:
            raise ValueError(f"malformed super-dimension {text!r}: expected '(p|q)'")
        return cls(int(m.group(1)), int(m.group(2)))


ZERO = SuperDim(0, 0)
UNIT = SuperDim(1, 0)


def direct_sum(a: SuperDim, b: SuperDim) -> SuperDim:
    return SuperDim(a.even + b.even, a.odd + b.odd)


def tensor(a: SuperDim, b: SuperDim) -> SuperDim:
    # odd x odd is even
    return SuperDim(a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even)


# --------------------------------------------------------------------------
# hook tableaux
#
# Letters 0..p-1 are unprimed (even), p..p+q-1 primed (odd); all unprimed
# precede all primed.  Rows weakly increase with no repeated primed letter;
# columns weakly increase with no repeated unprimed letter.


def _rows(length: int, p: int, q: int, above: tuple[int, ...] | None) -> Iterator[tuple[int, ...]]:
    letters = p + q
    row: list[int] = []

    def extend(start: int) -> Iterator[tuple[int, ...]]:
        j = len(row)
        if j == length:
            yield tuple(row)
            return
        for v in range(start, letters):
            if above is not None:
                a = above[j]
                if v < a or (v == a and v < p):
                    continue
            if v >= p and length - j - 1 > letters - 1 - v:
                break  # the rest of the row is primed and strictly increasing
            row.append(v)
            # a primed letter may not repeat along a row
            yield from extend(v + 1 if v >= p else v)
            row.pop()

    yield from extend(0)


def hook_tableaux(lam: Iterable[int], p: int, q: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every (p, q)-hook tableau of shape ``lam`` as a tuple of rows.

    Entries below ``p`` are unprimed letters, the rest primed.
    """
    lam = Partition(lam)

    def build(i: int, acc: list[tuple[int, ...]]):
        if i == len(lam):
            yield tuple(acc)
            return
        prev = acc[-1] if acc else None
        for row in _rows(lam[i], p, q, prev):
            acc.append(row)
            yield from build(i + 1, acc)
            acc.pop()

    yield from build(0, [])


@lru_cache(maxsize=None)
def _count(shape: tuple[int, ...], p: int, q: int, i: int, above: tuple[int, ...] | None) -> tuple[int, int]:
    if i == len(shape):
        return 1, 0
    even = odd = 0
    for row in _rows(shape[i], p, q, above):
        primed = sum(1 for v in row if v >= p)
        e, o = _count(shape, p, q, i + 1, row)
        if primed % 2:
            even, odd = even + o, odd + e
        else:
            even, odd = even + e, odd + o
    return even, odd


def schur_dims(lam: Iterable[int], a: SuperDim, max_weight: int = DEFAULT_MAX_WEIGHT) -> SuperDim:
    """Even/odd dimensions of S_lam(a) in the universal model."""
    lam = Partition(lam)
    if lam.weight > max_weight:
        raise ValueError(f"weight {lam.weight} exceeds max_weight={max_weight}")
    if not lam:
        return UNIT
    if not fits_hook(lam, a.even, a.odd):
        return ZERO
    return SuperDim(*_count(tuple(lam), a.even, a.odd, 0, None))


def _class_sum(lam: Partition, per_cycle) -> Fraction:
    n = lam.weight
    total = Fraction(0)
    for mu in enumerate_partitions(n):
        val = 1
        for k in mu:
            val *= per_cycle(k)
        total += Fraction(character(lam, mu) * val, centralizer_order(mu))
    return total


def schur_sdim_character(lam: Iterable[int], a: SuperDim) -> int:
    """Super-dimension of S_lam(a) from characters.

    (1/n!) sum_s chi_lam(s) str(s | a^{(x)n}); the supertrace of a k-cycle on
    a^{(x)k} with Koszul signs is p - q for every k.
    """
    lam = Partition(lam)
    if not lam:
        raise ValueError("needs weight >= 1")
    val = _class_sum(lam, lambda k: a.even - a.odd)
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral super-dimension {val} for {lam}, {a}")
    return int(val)


def schur_total_dim_character(lam: Iterable[int], a: SuperDim) -> int:
    """Total dimension even + odd of S_lam(a) from characters.

    Same average with the ordinary trace, which is p - (-1)^k q on a k-cycle.
    """
    lam = Partition(lam)
    if not lam:
        raise ValueError("needs weight >= 1")
    val = _class_sum(lam, lambda k: a.even - (-1) ** k * a.odd)
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral dimension {val} for {lam}, {a}")
    return int(val)


def power_dims(kind: str, n: int, a: SuperDim) -> SuperDim:
    """``wedge`` or ``sym`` power of ``a``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "wedge":
        shape = Partition([1] * n)
    elif kind == "sym":
        shape = Partition([n] if n else [])
    else:
        raise ValueError(f"kind must be 'wedge' or 'sym', got {kind!r}")
    return schur_dims(shape, a, max_weight=max(n, DEFAULT_MAX_WEIGHT))


@dataclass(frozen=True)
class KimStats:
    kim_plus: int
    kim_minus: int
    kim: int
    euler: int
    is_even: bool
    is_odd: bool

    def as_dict(self) -> dict:
        return {"kim_plus": self.kim_plus, "kim_minus": self.kim_minus, "kim": self.kim,
                "euler": self.euler, "is_even": self.is_even, "is_odd": self.is_odd}


def kim_stats(a: SuperDim) -> KimStats:
    """Kimura dimensions of ``a``, with the vanishing thresholds checked."""
    p, q = a.even, a.odd
    plus = SuperDim(p, 0)
    minus = SuperDim(0, q)
    if p and power_dims("wedge", p, plus).is_zero:
        raise ArithmeticError(f"wedge^{p} of {plus} vanished")
    if not power_dims("wedge", p + 1, plus).is_zero:
        raise ArithmeticError(f"wedge^{p + 1} of {plus} did not vanish")
    if q and power_dims("sym", q, minus).is_zero:
        raise ArithmeticError(f"Sym^{q} of {minus} vanished")
    if not power_dims("sym", q + 1, minus).is_zero:
        raise ArithmeticError(f"Sym^{q + 1} of {minus} did not vanish")
    return KimStats(p, q, p + q, p - q, q == 0, p == 0)


def hook_split_total(lam: Iterable[int], p: int, q: int) -> int:
    """Total dimension via sum_{mu, nu} c^lam_{mu nu} N_mu(p) N_{nu'}(q)."""
    lam = Partition(lam)
    n = lam.weight
    total = 0
    for k in range(n + 1):
        for mu in enumerate_partitions(k):
            nmu = ssyt_count(mu, p)
            if not nmu:
                continue
            for nu in enumerate_partitions(n - k):
                c = lr_coefficient(lam, mu, nu)
                if c:
                    total += c * nmu * ssyt_count(conjugate(nu), q)
    return total
