"""A finite model of the orbit category C / (- (x) O).

The ambient category C is synthetic: an object is a formal direct sum of
labelled components, each carrying a twist index, and a morphism is a
rational matrix (rows indexed by target components, columns by source
components).  Tensoring with the invertible object O shifts every twist index
by one.  A morphism a -> b in the orbit category is a finitely supported
family {f_n}, f_n : a -> b (x) O^n, and composition is the convolution

    (g o f)_i = sum_n (g_{i-n} (x) O^n) o f_n .

Matrices are numpy object arrays of Fractions so all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

__all__ = [
    "GradedObject",
    "OrbitMorphism",
    "UnfoldResult",
    "ObjectMismatchError",
    "PreconditionError",
    "as_matrix",
    "compose",
    "project",
    "orbit_identity",
    "unfold_summand",
    "solve_left_inverse",
]


class ObjectMismatchError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


def as_matrix(rows, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Exact rational matrix from nested sequences (ints, Fractions, "a/b")."""
    if isinstance(rows, np.ndarray) and rows.dtype == object:
        arr = rows.copy()
    else:
        arr = np.array(rows, dtype=object)
    if shape is not None and arr.size == 0:
        arr = arr.reshape(shape)
    if arr.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = Fraction(v)
    return out


def _zeros(r: int, c: int) -> np.ndarray:
    return as_matrix(np.zeros((r, c), dtype=int))


def _eye(n: int) -> np.ndarray:
    return as_matrix(np.eye(n, dtype=int))


def _is_zero(m: np.ndarray) -> bool:
    return all(v == 0 for v in m.flat)


def _equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


@dataclass(frozen=True)
class GradedObject:
    """Formal direct sum of components ``(label, twist)``."""

    components: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "components",
                           tuple((str(lbl), int(t)) for lbl, t in self.components))

    @classmethod
    def of(cls, *labels: str) -> "GradedObject":
        return cls(tuple((lbl, 0) for lbl in labels))

    def __len__(self) -> int:
        return len(self.components)

    def twist(self, n: int) -> "GradedObject":
        return GradedObject(tuple((lbl, t + n) for lbl, t in self.components))

    def __add__(self, other: "GradedObject") -> "GradedObject":
        return GradedObject(self.components + other.components)

    def to_json(self) -> list:
        return [[lbl, t] for lbl, t in self.components]

    @classmethod
    def from_json(cls, data) -> "GradedObject":
        comps = []
        for item in data:
            if isinstance(item, str):
                comps.append((item, 0))
            else:
                comps.append((item[0], item[1]))
        return cls(tuple(comps))


@dataclass(frozen=True, eq=False)
class OrbitMorphism:
    source: GradedObject
    target: GradedObject
    components: Mapping[int, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        shape = (len(self.target), len(self.source))
        clean = {}
        for n, m in self.components.items():
            m = as_matrix(m, shape)
            if m.shape != shape:
                raise ValueError(f"component {n} has shape {m.shape}, expected {shape}")
            if not _is_zero(m):
                clean[int(n)] = m
        object.__setattr__(self, "components", dict(sorted(clean.items())))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.components)

    def component(self, n: int) -> np.ndarray:
        m = self.components.get(n)
        return m.copy() if m is not None else _zeros(len(self.target), len(self.source))

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrbitMorphism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.support == other.support
                and all(_equal(m, other.components[n]) for n, m in self.components.items()))

    def __add__(self, other: "OrbitMorphism") -> "OrbitMorphism":
        if (self.source, self.target) != (other.source, other.target):
            raise ObjectMismatchError("cannot add morphisms between different objects")
        keys = self.support | other.support
        return OrbitMorphism(self.source, self.target,
                             {n: self.component(n) + other.component(n) for n in keys})

    def __matmul__(self, other: "OrbitMorphism") -> "OrbitMorphism":
        return compose(self, other)

    def direct_sum(self, other: "OrbitMorphism") -> "OrbitMorphism":
        """Block-diagonal f (+) g : a (+) a' -> b (+) b'."""
        keys = self.support | other.support
        comps = {}
        for n in keys:
            top = np.hstack([self.component(n), _zeros(len(self.target), len(other.source))])
            bot = np.hstack([_zeros(len(other.target), len(self.source)), other.component(n)])
            comps[n] = np.vstack([top, bot])
        return OrbitMorphism(self.source + other.source, self.target + other.target, comps)

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "components": {str(n): [[str(v) for v in row] for row in m]
                           for n, m in self.components.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "OrbitMorphism":
        comps = {int(n): [[Fraction(v) for v in row] for row in rows]
                 for n, rows in data.get("components", {}).items()}
        return cls(GradedObject.from_json(data["source"]), GradedObject.from_json(data["target"]), comps)


def compose(g: OrbitMorphism, f: OrbitMorphism) -> OrbitMorphism:
    """g o f for f : a -> b and g : b -> c."""
    if f.target != g.source:
        raise ObjectMismatchError(f"codomain of f {f.target.components} != domain of g {g.source.components}")
    out: dict[int, np.ndarray] = {}
    for n, fn in f.components.items():
        for m, gm in g.components.items():
            # g_m twisted by O^n has the same matrix and lands in degree m + n
            i = m + n
            term = gm.dot(fn)
            out[i] = out[i] + term if i in out else term
    return OrbitMorphism(f.source, g.target, out)


def project(f0, source: GradedObject | None = None, target: GradedObject | None = None) -> OrbitMorphism:
    """The canonical functor on morphisms: f |-> {f_0 = f, f_n = 0 otherwise}."""
    m = as_matrix(f0)
    source = source if source is not None else GradedObject(tuple((f"x{j}", 0) for j in range(m.shape[1])))
    if target is None:
        square = m.shape[0] == m.shape[1]
        target = source if square else GradedObject(tuple((f"y{i}", 0) for i in range(m.shape[0])))
    return OrbitMorphism(source, target, {0: m})


def orbit_identity(a: GradedObject) -> OrbitMorphism:
    return OrbitMorphism(a, a, {0: _eye(len(a))})


@dataclass(frozen=True, eq=False)
class UnfoldResult:
    alpha: np.ndarray
    beta: np.ndarray
    big: GradedObject
    N: int
    is_summand: bool

    def to_json(self) -> dict:
        mat = lambda m: [[str(v) for v in row] for row in m]
        return {"N": self.N, "alpha": mat(self.alpha), "beta": mat(self.beta),
                "sum_object": self.big.to_json(), "is_summand": self.is_summand}


def unfold_summand(f: OrbitMorphism, g: OrbitMorphism, N: int | None = None) -> UnfoldResult:
    """Turn an orbit-category retraction into a plain one.

    Given f : a -> b and g : b -> a with g o f = id in the orbit category,
    alpha stacks f_{-N..N} into a -> (+)_{n=-N}^{N} b (x) O^n and beta puts
    g_{-n} (x) O^n side by side on the way back.  beta o alpha is the degree
    zero part of g o f, so ``a`` is a direct summand of the big sum.
    """
    a, b = f.source, f.target
    if g.source != b or g.target != a:
        raise ObjectMismatchError("g must go from the target of f back to its source")
    if compose(g, f) != orbit_identity(a):
        raise PreconditionError("g o f is not the orbit identity of the source")
    bound = max((abs(n) for n in f.support | g.support), default=0)
    if N is None:
        N = max(bound, 1)
    if N < bound:
        raise PreconditionError(f"N = {N} is below the largest support index {bound}")
    shifts = range(-N, N + 1)
    alpha = np.vstack([f.component(n) for n in shifts])
    beta = np.hstack([g.component(-n) for n in shifts])
    big = GradedObject(sum((b.twist(n).components for n in shifts), ()))
    is_summand = _equal(beta.dot(alpha), _eye(len(a)))
    return UnfoldResult(alpha, beta, big, N, is_summand)


def _solve(A: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """One exact solution of A x = rhs (free variables set to 0), or None."""
    rows, cols = len(A), len(A[0]) if A else 0
    M = [list(r) + [v] for r, v in zip(A, rhs)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                k = M[i][c]
                M[i] = [x - k * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if any(all(v == 0 for v in row[:-1]) and row[-1] != 0 for row in M):
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = M[i][-1]
    return x


def solve_left_inverse(f: OrbitMorphism, support: Iterable[int]) -> OrbitMorphism | None:
    """Find g supported in ``support`` with g o f = id, by exact linear solve.

    Returns None when no such g exists on that support.
    """
    a, b = f.source, f.target
    support = sorted(set(support))
    na, nb = len(a), len(b)
    # unknowns: entries of g_m (na x nb) for each m in support
    index = {(m, i, j): k for k, (m, i, j) in enumerate(
        (m, i, j) for m in support for i in range(na) for j in range(nb))}
    degrees = sorted({m + n for m in support for n in f.support} | {0})
    A, rhs = [], []
    for deg in degrees:
        for i in range(na):
            for j in range(na):
                row = [Fraction(0)] * len(index)
                for n, fn in f.components.items():
                    m = deg - n
                    if m not in support:
                        continue
                    for k in range(nb):
                        row[index[(m, i, k)]] += fn[k, j]
                A.append(row)
                rhs.append(Fraction(int(deg == 0 and i == j)))
    if not index:
        return None
    sol = _solve(A, rhs)
    if sol is None:
        return None
    comps = {m: [[sol[index[(m, i, j)]] for j in range(nb)] for i in range(na)] for m in support}
    return OrbitMorphism(b, a, comps)
