"""Symmetric groups, characters and the rational group algebra Q[S_n].

Permutations act on {1..n} and compose as functions, ``(s * t)(i) = s(t(i))``.
Group-algebra elements are keyed by the Lehmer rank of the permutation, which
coincides with the index in lexicographic order; for n <= 7 products are
evaluated densely with numpy integer arithmetic over a common denominator,
so everything stays exact.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import factorial, gcd
from typing import Iterable, Iterator, Mapping

import numpy as np

from .partitions import Partition, enumerate_partitions, irrep_dimension

__all__ = [
    "Permutation",
    "GroupAlgebraElement",
    "character",
    "centralizer_order",
    "class_size",
    "ga_multiply",
    "young_idempotent",
    "verify_idempotent_system",
    "lr_coefficient",
    "max_degree",
    "ResourceLimitError",
]

DEFAULT_MAX_N = 7
# dense products need an n! x n! rank table; 7! ** 2 int16 entries is ~50 MB
_DENSE_TABLE_MAX_N = 7


class ResourceLimitError(ValueError):
    pass


def max_degree() -> int:
    """Ceiling for factorial-scale computations (env ``KIMURA_MAX_N``)."""
    raw = os.environ.get("KIMURA_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    return int(raw)


# --------------------------------------------------------------------------
# permutations


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Iterable[int]) -> "Permutation":
        imgs = list(range(1, n + 1))
        for cyc in cycles:
            cyc = list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                imgs[a - 1] = b
        return cls(tuple(imgs))

    @classmethod
    def from_rank(cls, n: int, rank: int) -> "Permutation":
        if not 0 <= rank < factorial(n):
            raise ValueError("rank out of range")
        pool = list(range(1, n + 1))
        imgs = []
        for i in range(n - 1, -1, -1):
            q, rank = divmod(rank, factorial(i))
            imgs.append(pool.pop(q))
        return cls(tuple(imgs))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def rank(self) -> int:
        """Lehmer rank == position in lexicographic order."""
        n = self.degree
        r = 0
        for i, a in enumerate(self.images):
            smaller = sum(1 for b in self.images[i + 1:] if b < a)
            r += smaller * factorial(n - 1 - i)
        return r

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = []
            i = start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        return Partition(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self) -> int:
        return (-1) ** (self.degree - len(self.cycles()))

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


@lru_cache(maxsize=None)
def _perm_array(n: int) -> np.ndarray:
    """All permutations of 0..n-1 in lexicographic (= Lehmer rank) order."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64)


@lru_cache(maxsize=None)
def _rank_lookup(n: int) -> tuple[np.ndarray, np.ndarray]:
    perms = _perm_array(n)
    powers = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    lookup = np.full(n ** n, -1, dtype=np.int32)
    lookup[perms @ powers] = np.arange(len(perms), dtype=np.int32)
    return powers, lookup


def _compose_row(n: int, s: int) -> np.ndarray:
    """ranks of perm(s) o perm(r) for every r"""
    perms = _perm_array(n)
    powers, lookup = _rank_lookup(n)
    return lookup[perms[s][perms] @ powers]


@lru_cache(maxsize=None)
def _left_div_table(n: int) -> np.ndarray:
    """T[s, t] = rank(perm(s)^-1 o perm(t))."""
    size = factorial(n)
    dtype = np.int16 if size < 2 ** 15 else np.int32
    perms = _perm_array(n)
    powers, lookup = _rank_lookup(n)
    inv_perms = np.argsort(perms, axis=1)
    inv_ranks = lookup[inv_perms @ powers]
    table = np.empty((size, size), dtype=dtype)
    for s in range(size):
        table[s] = _compose_row(n, int(inv_ranks[s]))
    return table


@lru_cache(maxsize=None)
def _cycle_types(n: int) -> tuple[Partition, ...]:
    return tuple(Permutation.from_rank(n, r).cycle_type() for r in range(factorial(n)))


# --------------------------------------------------------------------------
# characters


def centralizer_order(mu: Iterable[int]) -> int:
    """z_mu = prod_k k^{m_k} m_k!"""
    mu = Partition(mu)
    out = 1
    for k in set(mu):
        m = mu.count(k)
        out *= k ** m * factorial(m)
    return out


def class_size(mu: Iterable[int]) -> int:
    mu = Partition(mu)
    return factorial(mu.weight) // centralizer_order(mu)


def character(lam: Iterable[int], mu: Iterable[int]) -> int:
    """chi_lam on the conjugacy class of cycle type mu (Murnaghan-Nakayama)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.weight != mu.weight:
        raise ValueError(f"weight mismatch: |{lam}| = {lam.weight} != |{mu}| = {mu.weight}")
    if lam.weight == 0:
        raise ValueError("characters are defined for n >= 1")
    return _mn(tuple(lam), tuple(mu))


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    length = len(lam)
    # beta numbers: removing a k-border strip moves one bead down by k
    beta = [lam[i] + length - 1 - i for i in range(length)]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in beads:
            continue
        height = sum(1 for x in beta if target < x < b)
        new_beta = sorted((beads - {b}) | {target}, reverse=True)
        new_lam = tuple(x - (length - 1 - i) for i, x in enumerate(new_beta))
        new_lam = tuple(x for x in new_lam if x > 0)
        total += (-1) ** height * _mn(new_lam, rest)
    return total


# --------------------------------------------------------------------------
# group algebra


class GroupAlgebraElement:
    """Element of Q[S_n]: a finite map permutation -> Fraction.

    ``terms`` maps Lehmer ranks to nonzero Fractions.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[int, Fraction] | None = None):
        self.degree = degree
        size = factorial(degree)
        clean = {}
        for k, v in (terms or {}).items():
            if not 0 <= k < size:
                raise ValueError(f"rank {k} out of range for degree {degree}")
            v = Fraction(v)
            if v:
                clean[int(k)] = v
        self.terms = clean

    @classmethod
    def from_perms(cls, degree: int, coeffs: Mapping[Permutation, object]) -> "GroupAlgebraElement":
        terms: dict[int, Fraction] = {}
        for perm, c in coeffs.items():
            if perm.degree != degree:
                raise ValueError("degree mismatch")
            r = perm.rank()
            terms[r] = terms.get(r, Fraction(0)) + Fraction(c)
        return cls(degree, terms)

    @classmethod
    def identity(cls, degree: int) -> "GroupAlgebraElement":
        return cls(degree, {0: Fraction(1)})

    @classmethod
    def basis(cls, perm: Permutation, coeff=1) -> "GroupAlgebraElement":
        return cls(perm.degree, {perm.rank(): Fraction(coeff)})

    def coefficient(self, perm: Permutation) -> Fraction:
        if perm.degree != self.degree:
            raise ValueError("degree mismatch")
        return self.terms.get(perm.rank(), Fraction(0))

    def items(self) -> Iterator[tuple[Permutation, Fraction]]:
        for r in sorted(self.terms):
            yield Permutation.from_rank(self.degree, r), self.terms[r]

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def _check(self, other: "GroupAlgebraElement") -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} != {other.degree}")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return GroupAlgebraElement(self.degree, out)

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.degree, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return ga_multiply(self, other)
        c = Fraction(other)
        return GroupAlgebraElement(self.degree, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __repr__(self) -> str:
        shown = ", ".join(f"{Permutation.from_rank(self.degree, k).images}: {v}"
                          for k, v in list(sorted(self.terms.items()))[:6])
        more = "" if len(self.terms) <= 6 else f", ... ({len(self.terms)} terms)"
        return f"GroupAlgebraElement(degree={self.degree}, {{{shown}{more}}})"

    def to_dense(self) -> tuple[np.ndarray, int]:
        """(integer numerators over all n! ranks, common denominator)."""
        den = reduce(lambda a, b: a * b // gcd(a, b), (v.denominator for v in self.terms.values()), 1)
        num = np.zeros(factorial(self.degree), dtype=object)
        for k, v in self.terms.items():
            num[k] = v.numerator * (den // v.denominator)
        return num, den

    @classmethod
    def from_dense(cls, degree: int, num: np.ndarray, den: int) -> "GroupAlgebraElement":
        nz = np.flatnonzero(num)
        return cls(degree, {int(k): Fraction(int(num[k]), den) for k in nz})


def ga_multiply(x: GroupAlgebraElement, y: GroupAlgebraElement) -> GroupAlgebraElement:
    """Convolution product: (x y)(t) = sum_s x(s) y(s^-1 t)."""
    if not isinstance(x, GroupAlgebraElement) or not isinstance(y, GroupAlgebraElement):
        raise TypeError("ga_multiply expects group algebra elements")
    x._check(y)
    n = x.degree
    if not x or not y:
        return GroupAlgebraElement(n)
    if n <= _DENSE_TABLE_MAX_N and len(x) * len(y) > 4 * factorial(n):
        return _multiply_dense(x, y)
    return _multiply_sparse(x, y)


def _multiply_sparse(x: GroupAlgebraElement, y: GroupAlgebraElement) -> GroupAlgebraElement:
    n = x.degree
    xs = [(Permutation.from_rank(n, k), v) for k, v in x.terms.items()]
    ys = [(Permutation.from_rank(n, k), v) for k, v in y.terms.items()]
    out: dict[int, Fraction] = {}
    for s, a in xs:
        for t, b in ys:
            r = (s * t).rank()
            out[r] = out.get(r, Fraction(0)) + a * b
    return GroupAlgebraElement(n, out)


def _multiply_dense(x: GroupAlgebraElement, y: GroupAlgebraElement, block: int = 720) -> GroupAlgebraElement:
    n = x.degree
    xn, xd = x.to_dense()
    yn, yd = y.to_dense()
    bound = sum(abs(int(v)) for v in xn) * max(abs(int(v)) for v in yn)
    dtype = np.int64 if bound < 2 ** 62 else object
    xn = xn.astype(dtype)
    yn = yn.astype(dtype)
    table = _left_div_table(n)
    size = factorial(n)
    acc = np.zeros(size, dtype=dtype)
    support = np.flatnonzero(xn)
    for start in range(0, len(support), block):
        rows = support[start:start + block]
        acc += xn[rows] @ yn[table[rows]]
    den = xd * yd
    g = reduce(gcd, (int(v) for v in acc[np.flatnonzero(acc)]), den)
    return GroupAlgebraElement.from_dense(n, acc.astype(object) // g, den // g)


# --------------------------------------------------------------------------
# central idempotents


@lru_cache(maxsize=None)
def _idempotent(lam: tuple[int, ...]) -> GroupAlgebraElement:
    n = sum(lam)
    dim = irrep_dimension(lam)
    chi_by_type = {mu: character(lam, mu) for mu in enumerate_partitions(n)}
    scale = Fraction(dim, factorial(n))
    terms = {r: scale * chi_by_type[mu] for r, mu in enumerate(_cycle_types(n))}
    return GroupAlgebraElement(n, terms)


def young_idempotent(lam: Iterable[int]) -> GroupAlgebraElement:
    """Central idempotent e_lam = dim(V_lam)/n! * sum_s chi_lam(s) s."""
    lam = Partition(lam)
    if not lam:
        raise ValueError("young_idempotent needs a nonempty partition")
    return _idempotent(tuple(lam))


def verify_idempotent_system(n: int, max_n: int | None = None) -> dict:
    """Check e_l^2 = e_l, e_l e_m = 0 and sum e_l = 1 exactly in Q[S_n].

    Returns ``{"n": n, "passed": bool, "checks": [...]}``; each check record
    is ``{"lambda", "mu", "kind", "pass"}`` with kind idem/orth/complete.
    """
    limit = max_degree() if max_n is None else max_n
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > limit:
        raise ResourceLimitError(f"n = {n} exceeds the configured maximum {limit} (KIMURA_MAX_N)")
    shapes = enumerate_partitions(n)
    idem = {lam: young_idempotent(lam) for lam in shapes}
    zero = GroupAlgebraElement(n)
    checks = []
    for lam in shapes:
        for mu in shapes:
            prod_ = ga_multiply(idem[lam], idem[mu])
            if lam == mu:
                checks.append({"lambda": str(lam), "mu": str(mu), "kind": "idem",
                               "pass": prod_ == idem[lam]})
            else:
                checks.append({"lambda": str(lam), "mu": str(mu), "kind": "orth",
                               "pass": prod_ == zero})
    total = reduce(lambda a, b: a + b, idem.values(), zero)
    checks.append({"lambda": None, "mu": None, "kind": "complete",
                   "pass": total == GroupAlgebraElement.identity(n)})
    return {"n": n, "passed": all(c["pass"] for c in checks), "checks": checks}


# --------------------------------------------------------------------------
# Littlewood-Richardson


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """c^lam_{mu nu}: LR tableaux of shape lam/mu and content nu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if mu.weight + nu.weight != lam.weight:
        raise ValueError(f"weight mismatch: |{mu}| + |{nu}| != |{lam}|")
    if any(mu.part(i) > lam.part(i) for i in range(1, len(mu) + 1)):
        return 0
    if any(nu.part(i) > lam.part(i) for i in range(1, len(nu) + 1)):
        return 0
    return _lr_count(tuple(lam), tuple(mu), tuple(nu))


@lru_cache(maxsize=None)
def _lr_count(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    rows = len(lam)
    mu_ = list(mu) + [0] * (rows - len(mu))
    # reading order: rows top to bottom, each right to left
    cells = [(r, c) for r in range(rows) for c in range(lam[r] - 1, mu_[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(nu) + 1)
    found = 0

    def place(i: int) -> None:
        nonlocal found
        if i == len(cells):
            found += 1
            return
        r, c = cells[i]
        hi = filling.get((r, c + 1), len(nu))  # row weakly increasing
        lo = filling.get((r - 1, c), 0) + 1  # column strictly increasing
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            place(i + 1)
            del filling[(r, c)]
            counts[v] -= 1

    place(0)
    return found
