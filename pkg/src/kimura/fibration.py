"""Kimura dimensions and motivic decompositions of quadric fibrations.

A flat quadric fibration Q -> C of relative dimension d - 2 with simple
degenerations is described numerically by :class:`FibrationSpec`: the rank d,
the base curve (projective of genus g, or an arbitrary Kimura-finite object
given by its super-dimension), the number #D of critical values, the
discriminant double cover (needed for even d) and the standing hypotheses on
the base field.

Formulas
--------
even d:  kim(Q) = kim(C~) + (d - 2) kim(C)
odd d:   kim(Q) = #D + (d - 1) kim(C)      (k algebraically closed, 1/2 in k)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .motives import (
    FormalMotive,
    MotiveAtom,
    curve,
    custom,
    kim,
    opaque,
    points,
    sod_to_direct_sum,
    unit,
)
from .schur import SuperDim

__all__ = [
    "FibrationSpec",
    "Decomposition",
    "HypothesisError",
    "InconsistentInputError",
    "FORMULA_EVEN",
    "FORMULA_ODD",
    "quadric_sod",
    "nc_decompose",
    "kim_fibration",
    "motivic_decomposition",
    "root_stack_decompose",
    "riemann_hurwitz_cover_genus",
    "evaluate",
    "run_batch",
]

FORMULA_EVEN = "kim(C~) + (d-2)*kim(C)"
FORMULA_ODD = "#D + (d-1)*kim(C)"

CLIFFORD_LABEL = "perf(C;Cl0)"


class HypothesisError(ValueError):
    """A standing assumption needed by the requested computation is missing."""

    def __init__(self, hypothesis: str, message: str):
        super().__init__(message)
        self.hypothesis = hypothesis


class InconsistentInputError(ValueError):
    pass


@dataclass(frozen=True)
class FibrationSpec:
    d: int
    genus: int | None = 0
    crit_count: int = 0
    cover_genus: int | None = None
    base_sdim: SuperDim | None = None
    cover_sdim: SuperDim | None = None
    algebraically_closed: bool = False
    char_not_2: bool = False
    projective: bool = False

    def __post_init__(self):
        if self.d < 3:
            raise InconsistentInputError(f"d must be >= 3, got {self.d}")
        if self.crit_count < 0:
            raise InconsistentInputError("crit_count must be nonnegative")
        if (self.genus is None) == (self.base_sdim is None):
            raise InconsistentInputError("give exactly one of genus or base_sdim for the base curve")
        if self.genus is not None and self.genus < 0:
            raise InconsistentInputError("genus must be nonnegative")
        if self.cover_genus is not None and self.cover_genus < 0:
            raise InconsistentInputError("cover_genus must be nonnegative")
        if self.cover_genus is not None and self.cover_sdim is not None:
            raise InconsistentInputError("give at most one of cover_genus or cover_sdim")

    @property
    def even(self) -> bool:
        return self.d % 2 == 0

    def base_atom(self) -> MotiveAtom:
        return curve(self.genus) if self.genus is not None else custom(self.base_sdim)

    def cover_atom(self) -> MotiveAtom:
        if self.cover_genus is not None:
            return curve(self.cover_genus)
        if self.cover_sdim is not None:
            return custom(self.cover_sdim)
        raise HypothesisError(
            "discriminant_cover",
            "even d needs the discriminant double cover: pass cover_genus (or cover_sdim)")

    def flags(self) -> dict:
        return {"algebraically_closed": self.algebraically_closed,
                "char_not_2": self.char_not_2, "projective": self.projective}

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "genus": self.genus,
            "crit": self.crit_count,
            "cover_genus": self.cover_genus,
            "base_sdim": None if self.base_sdim is None else str(self.base_sdim),
            "cover_sdim": None if self.cover_sdim is None else str(self.cover_sdim),
            **self.flags(),
        }

    @classmethod
    def from_json(cls, rec: dict) -> "FibrationSpec":
        known = {"d", "genus", "crit", "crit_count", "cover_genus", "base_sdim", "cover_sdim",
                 "algebraically_closed", "alg_closed", "char_not_2", "projective"}
        unknown = set(rec) - known
        if unknown:
            raise InconsistentInputError(f"unknown fibration fields: {sorted(unknown)}")
        sd = lambda v: None if v is None else SuperDim.parse(v) if isinstance(v, str) else SuperDim(*v)
        base_sdim = sd(rec.get("base_sdim"))
        genus = rec.get("genus", None if base_sdim is not None else 0)
        return cls(
            d=int(rec["d"]),
            genus=genus,
            crit_count=int(rec.get("crit", rec.get("crit_count", 0))),
            cover_genus=rec.get("cover_genus"),
            base_sdim=base_sdim,
            cover_sdim=sd(rec.get("cover_sdim")),
            algebraically_closed=bool(rec.get("algebraically_closed", rec.get("alg_closed", False))),
            char_not_2=bool(rec.get("char_not_2", False)),
            projective=bool(rec.get("projective", False)),
        )


@dataclass(frozen=True)
class Decomposition:
    level: str  # "commutative" or "noncommutative"
    summands: FormalMotive
    provenance: str
    coefficients: str = "Q"
    relation: str = "isomorphism"
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.level not in ("commutative", "noncommutative"):
            raise ValueError(f"unknown level {self.level!r}")

    def kim(self) -> int:
        if self.level != "commutative":
            raise TypeError("Kimura dimension is only computed for commutative decompositions")
        return kim(self.summands).kim

    def to_json(self) -> dict:
        out = {
            "level": self.level,
            "relation": self.relation,
            "coefficients": self.coefficients,
            "provenance": self.provenance,
            "summands": self.summands.to_json(),
            "display": str(self.summands),
        }
        if self.level == "commutative":
            out["kim"] = self.kim()
        return out


def _require_odd_hypotheses(spec: FibrationSpec) -> None:
    if not spec.algebraically_closed:
        raise HypothesisError(
            "algebraically_closed",
            f"odd d = {spec.d} requires the base field to be algebraically closed")
    if not spec.char_not_2:
        raise HypothesisError(
            "char_not_2", f"odd d = {spec.d} requires 1/2 in the base field (characteristic != 2)")


def quadric_sod(spec: FibrationSpec) -> list[FormalMotive]:
    """Pieces <perf(C; Cl0), perf(C)_1, ..., perf(C)_{d-2}> of perf(Q)."""
    base = FormalMotive.of(spec.base_atom())
    return [FormalMotive.of(opaque(CLIFFORD_LABEL))] + [base] * (spec.d - 2)


def _crit_motive(spec: FibrationSpec) -> FormalMotive:
    return FormalMotive.of(points(spec.crit_count)) if spec.crit_count else FormalMotive()


def nc_decompose(spec: FibrationSpec) -> Decomposition:
    """Noncommutative motive of Q as a direct sum."""
    pieces = sod_to_direct_sum(quadric_sod(spec))
    clifford = opaque(CLIFFORD_LABEL)
    rest = FormalMotive(tuple((a, m) for a, m in pieces if a != clifford))
    if spec.even:
        cover = FormalMotive.of(spec.cover_atom())
        return Decomposition(
            "noncommutative", cover + rest,
            provenance="quadric SOD; even Clifford part ~ Azumaya algebra over the discriminant cover",
            coefficients="Z[1/2]")
    _require_odd_hypotheses(spec)
    # the even Clifford part is perf of the square-root stack of C along D
    stack = root_stack_decompose(2, FormalMotive.of(spec.base_atom()), _crit_motive(spec))
    return Decomposition(
        "noncommutative", stack.summands + rest,
        provenance="quadric SOD; even Clifford part ~ square-root stack of C along D",
        coefficients="Z")


@dataclass(frozen=True)
class KimResult:
    kim: int
    formula: str

    def to_json(self) -> dict:
        return {"kim": self.kim, "formula": self.formula}


def kim_fibration(spec: FibrationSpec) -> KimResult:
    kim_base = kim(FormalMotive.of(spec.base_atom())).kim
    if spec.even:
        kim_cover = kim(FormalMotive.of(spec.cover_atom())).kim
        return KimResult(kim_cover + (spec.d - 2) * kim_base, FORMULA_EVEN)
    _require_odd_hypotheses(spec)
    return KimResult(spec.crit_count + (spec.d - 1) * kim_base, FORMULA_ODD)


def motivic_decomposition(spec: FibrationSpec) -> Decomposition:
    """Commutative-level decomposition of M(Q).

    Odd d: Q(-(d-1)/2)^{#D} + sum_{i=0}^{d-2} h(C)(-i), an isomorphism for a
    projective fibration over an algebraically closed field.  Even d: the
    motive C~ + C^{d-2}, of which M(Q) is a direct summand of a sum of Tate
    twists; it carries the right Kimura dimension but is not an isomorphism.
    """
    base = spec.base_atom()
    if spec.even:
        witness = FormalMotive.of(spec.cover_atom()) + FormalMotive.of(base) * (spec.d - 2)
        return Decomposition(
            "commutative", witness,
            provenance="orbit-category isomorphism unfolded to a direct summand",
            relation="direct-summand witness up to Tate twists")
    _require_odd_hypotheses(spec)
    if not spec.projective:
        raise HypothesisError("projective",
                              "the explicit odd-d expansion needs Q and C projective")
    half = (spec.d - 1) // 2
    atoms = [(unit(-half), spec.crit_count)] + [(base.twisted(-i), 1) for i in range(spec.d - 1)]
    return Decomposition(
        "commutative", FormalMotive(tuple(atoms)),
        provenance="explicit Chow motive decomposition for odd d over C")


def root_stack_decompose(r: int, X: FormalMotive, D: FormalMotive, smooth: bool = True) -> Decomposition:
    """U(r-th root stack of X along D) = U(D)^{r-1} + U(X)."""
    if r < 1:
        raise InconsistentInputError(f"root order r must be >= 1, got {r}")
    notes = () if smooth else ("smoothness of X and D not asserted",)
    return Decomposition("noncommutative", D * (r - 1) + X,
                         provenance=f"root stack of order {r}: SOD into {r - 1} copies of perf(D) and perf(X)",
                         notes=notes)


def riemann_hurwitz_cover_genus(g: int, crit_count: int) -> int:
    """Genus of a double cover of a genus-g curve simply branched at crit_count points.

    Helper only; the caller asserts the cover exists and is connected.
    """
    if g < 0 or crit_count < 0:
        raise InconsistentInputError("genus and crit_count must be nonnegative")
    if crit_count % 2:
        raise InconsistentInputError(f"a double cover has an even number of branch points, got {crit_count}")
    cover = 2 * g - 1 + crit_count // 2
    if cover < 0:
        raise InconsistentInputError(
            f"no connected double cover of a genus {g} curve branched at {crit_count} points")
    return cover


def evaluate(spec: FibrationSpec) -> dict:
    """Everything computable for one spec, as a JSON-ready record."""
    res = kim_fibration(spec)
    nc = nc_decompose(spec)
    out = {"spec": spec.to_json(), "kim": res.kim, "formula": res.formula,
           "nc_decomposition": nc.to_json()}
    try:
        mot = motivic_decomposition(spec)
    except HypothesisError as exc:
        out["motivic_decomposition"] = None
        out["motivic_unavailable"] = {"hypothesis": exc.hypothesis, "message": str(exc)}
    else:
        if mot.kim() != res.kim:
            raise ArithmeticError(f"decomposition kim {mot.kim()} != formula kim {res.kim}")
        out["motivic_decomposition"] = mot.to_json()
    return out


def run_batch(records: Iterable[dict]) -> list[dict]:
    """One result record per fibration description; errors are reported inline."""
    results = []
    for rec in records:
        try:
            spec = FibrationSpec.from_json(rec)
            results.append({"status": "ok", **evaluate(spec)})
        except HypothesisError as exc:
            results.append({"status": "error", "code": "hypothesis", "hypothesis": exc.hypothesis,
                            "message": str(exc), "input": rec})
        except (InconsistentInputError, ValueError, KeyError, TypeError) as exc:
            results.append({"status": "error", "code": "usage", "message": str(exc), "input": rec})
    return results
