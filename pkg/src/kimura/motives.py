"""Formal motives: finite direct sums of Tate-twisted atoms.

Atoms are the unit object, projective curves of a given genus, finite point
sets, user-supplied Kimura-finite objects (given by their super-dimension),
and opaque labels for noncommutative pieces that carry no super-dimension.
A twist ``t`` means tensoring with the Tate object ``Q(1)[2]`` t times; the
Tate object is even of dimension one, so twisting never changes Kimura data.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .schur import KimStats, SuperDim, kim_stats

__all__ = [
    "MotiveAtom",
    "FormalMotive",
    "unit",
    "tate",
    "curve",
    "points",
    "custom",
    "opaque",
    "sdim_of_motive",
    "kim",
    "euler_char",
    "tate_twist",
    "sod_to_direct_sum",
]

KINDS = ("unit", "curve", "points", "custom", "opaque")


@dataclass(frozen=True, order=True)
class MotiveAtom:
    kind: str
    params: tuple = ()
    twist: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown atom kind {self.kind!r}")
        params = tuple(self.params)
        if self.kind == "unit" and params:
            raise ValueError("unit takes no parameters")
        if self.kind == "curve" and (len(params) != 1 or int(params[0]) < 0):
            raise ValueError("curve takes one parameter: genus >= 0")
        if self.kind == "points" and (len(params) != 1 or int(params[0]) < 1):
            raise ValueError("points takes one parameter: number of points >= 1")
        if self.kind == "custom":
            if len(params) != 2 or min(int(x) for x in params) < 0:
                raise ValueError("custom takes two parameters: even and odd dimension")
        if self.kind == "opaque" and (len(params) != 1 or not isinstance(params[0], str)):
            raise ValueError("opaque takes one string label")
        if self.kind != "opaque":
            params = tuple(int(x) for x in params)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "twist", int(self.twist))

    @property
    def sdim(self) -> SuperDim:
        if self.kind == "unit":
            return SuperDim(1, 0)
        if self.kind == "curve":
            # h^0 + h^2 even, h^1 odd of dimension 2g
            return SuperDim(2, 2 * self.params[0])
        if self.kind == "points":
            return SuperDim(self.params[0], 0)
        if self.kind == "custom":
            return SuperDim(*self.params)
        raise ValueError(f"opaque atom {self.params[0]!r} has no super-dimension")

    def twisted(self, t: int) -> "MotiveAtom":
        return MotiveAtom(self.kind, self.params, self.twist + t)

    def untwisted(self) -> "MotiveAtom":
        return MotiveAtom(self.kind, self.params, 0)

    def label(self) -> str:
        if self.kind == "unit":
            base = "Q"
        elif self.kind == "curve":
            base = f"h(C_g={self.params[0]})"
        elif self.kind == "points":
            base = f"h(pt^{self.params[0]})"
        elif self.kind == "custom":
            base = f"X({self.params[0]}|{self.params[1]})"
        else:
            base = self.params[0]
        return base if self.twist == 0 else f"{base}({self.twist})"

    def as_dict(self) -> dict:
        return {"kind": self.kind, "params": list(self.params), "twist": self.twist}


def unit(twist: int = 0) -> MotiveAtom:
    return MotiveAtom("unit", (), twist)


def tate(t: int = 1) -> MotiveAtom:
    """Q(1)[2] to the t-th tensor power."""
    return MotiveAtom("unit", (), t)


def curve(genus: int, twist: int = 0) -> MotiveAtom:
    return MotiveAtom("curve", (genus,), twist)


def points(m: int, twist: int = 0) -> MotiveAtom:
    return MotiveAtom("points", (m,), twist)


def custom(sdim: SuperDim, twist: int = 0) -> MotiveAtom:
    return MotiveAtom("custom", (sdim.even, sdim.odd), twist)


def opaque(label: str, twist: int = 0) -> MotiveAtom:
    return MotiveAtom("opaque", (label,), twist)


@dataclass(frozen=True)
class FormalMotive:
    """Multiset of atoms, stored in normal form as sorted (atom, mult) pairs."""

    atoms: tuple[tuple[MotiveAtom, int], ...] = ()
    provenance: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        merged: Counter = Counter()
        for atom, mult in self.atoms:
            if mult < 0:
                raise ValueError("multiplicities must be nonnegative")
            merged[atom] += mult
        norm = tuple(sorted((a, m) for a, m in merged.items() if m > 0))
        object.__setattr__(self, "atoms", norm)

    @classmethod
    def of(cls, *atoms: MotiveAtom | tuple[MotiveAtom, int]) -> "FormalMotive":
        pairs = [(a, 1) if isinstance(a, MotiveAtom) else a for a in atoms]
        return cls(tuple(pairs))

    def __add__(self, other: "FormalMotive") -> "FormalMotive":
        return FormalMotive(self.atoms + other.atoms)

    def __mul__(self, k: int) -> "FormalMotive":
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        return FormalMotive(tuple((a, m * k) for a, m in self.atoms))

    __rmul__ = __mul__

    def __iter__(self):
        return iter(self.atoms)

    def __len__(self) -> int:
        return sum(m for _, m in self.atoms)

    def multiplicity(self, atom: MotiveAtom) -> int:
        return dict(self.atoms).get(atom, 0)

    def untwisted(self) -> "FormalMotive":
        return FormalMotive(tuple((a.untwisted(), m) for a, m in self.atoms))

    @property
    def has_opaque(self) -> bool:
        return any(a.kind == "opaque" for a, _ in self.atoms)

    def __str__(self) -> str:
        if not self.atoms:
            return "0"
        return " + ".join(a.label() if m == 1 else f"{a.label()}^{m}" for a, m in self.atoms)

    def to_json(self) -> list[dict]:
        return [dict(a.as_dict(), mult=m) for a, m in self.atoms]

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, records: Iterable[dict] | str) -> "FormalMotive":
        if isinstance(records, str):
            records = json.loads(records)
        pairs = []
        for rec in records:
            atom = MotiveAtom(rec["kind"], tuple(rec.get("params", ())), rec.get("twist", 0))
            pairs.append((atom, int(rec.get("mult", 1))))
        return cls(tuple(pairs))


def sdim_of_motive(motive: FormalMotive) -> SuperDim:
    total = SuperDim(0, 0)
    for atom, mult in motive:
        total = total + atom.sdim * mult
    return total


def kim(motive: FormalMotive) -> KimStats:
    return kim_stats(sdim_of_motive(motive))


def euler_char(motive: FormalMotive) -> int:
    """Categorical Euler characteristic chi(M+) + chi(M-) = p - q."""
    return sdim_of_motive(motive).euler


def tate_twist(motive: FormalMotive, t: int) -> FormalMotive:
    return FormalMotive(tuple((a.twisted(t), m) for a, m in motive), motive.provenance)


def sod_to_direct_sum(components: Sequence[FormalMotive]) -> FormalMotive:
    """Direct sum of the pieces of a semi-orthogonal decomposition.

    The order of the pieces survives only in ``provenance``.
    """
    total = FormalMotive()
    for c in components:
        total = total + c
    order = tuple(str(c) for c in components)
    return FormalMotive(total.atoms, ("sod", *order))
