"""Command-line interface; every command prints one JSON document.

Exit codes: 0 ok, 2 usage error, 3 hypothesis violation, 4 failed internal
cross-check.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import factorial

from . import fibration as fib
from .motives import FormalMotive, euler_char, kim, sdim_of_motive, tate_twist
from .orbit import ObjectMismatchError, OrbitMorphism, PreconditionError, compose, unfold_summand
from .partitions import enumerate_partitions, fits_hook, irrep_dimension, parse_partition
from .schur import SuperDim, kim_stats, schur_dims, schur_sdim_character, schur_total_dim_character
from .symmetric_group import (
    Permutation,
    ResourceLimitError,
    character,
    lr_coefficient,
    max_degree,
    verify_idempotent_system,
    young_idempotent,
)

EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_CROSSCHECK = 0, 2, 3, 4


class UsageError(Exception):
    pass


class CrossCheckError(Exception):
    def __init__(self, message: str, payload=None):
        super().__init__(message)
        self.payload = payload


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def _load_json(text: str):
    """Inline JSON, or ``@path`` to read a file."""
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return json.load(fh)
    return json.loads(text)


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# --------------------------------------------------------------------------
# commands; each returns (payload, citations)


def cmd_partitions(args):
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    parts = enumerate_partitions(args.n)
    return {"n": args.n, "count": len(parts), "partitions": [str(p) for p in parts]}, []


def cmd_character(args):
    lam, mu = _partition(args.shape), _partition(args.cls)
    if lam.weight != mu.weight or lam.weight == 0:
        raise UsageError(f"shape {lam} and class {mu} must be partitions of the same n >= 1")
    return {"shape": str(lam), "class": str(mu), "value": character(lam, mu)}, ["Murnaghan-Nakayama"]


def cmd_idempotents(args):
    limit = max_degree()
    if not 1 <= args.n <= limit:
        raise UsageError(f"--n must be in 1..{limit} (KIMURA_MAX_N)")
    if args.verify:
        report = verify_idempotent_system(args.n, max_n=limit)
        if not report["passed"]:
            raise CrossCheckError("idempotent system failed", report)
        return report, ["e_lam = dim(V_lam)/n! sum chi_lam(s) s"]
    n = args.n
    rows = []
    for lam in enumerate_partitions(n):
        e = young_idempotent(lam)
        rows.append({"lambda": str(lam), "dim": irrep_dimension(lam),
                     "identity_coefficient": _frac(e.coefficient(Permutation.identity(n))),
                     "support": len(e)})
    return {"n": n, "group_order": factorial(n), "idempotents": rows}, \
        ["e_lam = dim(V_lam)/n! sum chi_lam(s) s"]


def cmd_lr(args):
    lam, mu, nu = _partition(args.outer), _partition(args.left), _partition(args.right)
    if mu.weight + nu.weight != lam.weight:
        raise UsageError(f"weight mismatch: |{mu}| + |{nu}| != |{lam}|")
    return {"outer": str(lam), "left": str(mu), "right": str(nu),
            "coefficient": lr_coefficient(lam, mu, nu)}, ["LR tableau rule"]


def _sdim(values) -> SuperDim:
    p, q = values
    if p < 0 or q < 0:
        raise UsageError("super-dimension entries must be nonnegative")
    return SuperDim(p, q)


def cmd_schur(args):
    lam = _partition(args.shape)
    a = _sdim(args.sdim)
    out = schur_dims(lam, a)
    payload = {"shape": str(lam), "input": str(a), "output": str(out),
               "vanishes": out.is_zero, "hook_condition": fits_hook(lam, a.even, a.odd)}
    if lam:
        sdim = schur_sdim_character(lam, a)
        total = schur_total_dim_character(lam, a)
        payload["cross_check"] = {"super_trace": sdim, "trace": total,
                                  "agrees": sdim == out.euler and total == out.kim}
        if not payload["cross_check"]["agrees"]:
            raise CrossCheckError("tableau count disagrees with character formula", payload)
    return payload, ["hook tableaux", "character average"]


def cmd_kim(args):
    a = _sdim(args.sdim)
    return {"sdim": str(a), **kim_stats(a).as_dict()}, ["kim = kim+ + kim-"]


def cmd_motive(args):
    try:
        motive = FormalMotive.from_json(_load_json(args.json))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad motive description: {exc}") from None
    if args.twist:
        motive = tate_twist(motive, args.twist)
    try:
        sdim = sdim_of_motive(motive)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return {"motive": motive.to_json(), "display": str(motive), "sdim": str(sdim),
            **kim(motive).as_dict(), "euler_char": euler_char(motive)}, []


def _morphisms(text, *names):
    data = _load_json(text)
    try:
        return data, [OrbitMorphism.from_json(data[n]) for n in names]
    except (KeyError, ValueError, TypeError) as exc:
        raise UsageError(f"bad morphism description: {exc}") from None


def cmd_orbit_compose(args):
    _, (f, g) = _morphisms(args.json, "f", "g")
    try:
        h = compose(g, f)
    except ObjectMismatchError as exc:
        raise UsageError(str(exc)) from None
    return {"composite": h.to_json(), "support": sorted(h.support)}, \
        ["(g o f)_i = sum_n (g_{i-n} (x) O^n) o f_n"]


def cmd_unfold(args):
    data, (f, g) = _morphisms(args.json, "f", "g")
    N = args.N if args.N is not None else data.get("N")
    try:
        res = unfold_summand(f, g, N)
    except (ObjectMismatchError, PreconditionError) as exc:
        raise UsageError(str(exc)) from None
    if not res.is_summand:
        raise CrossCheckError("beta o alpha != id although g o f = id", res.to_json())
    return res.to_json(), ["beta o alpha = (g o f)_0"]


def _spec_from_args(args) -> fib.FibrationSpec:
    base_sdim = SuperDim(*args.base_sdim) if args.base_sdim else None
    return fib.FibrationSpec(
        d=args.d,
        genus=None if base_sdim is not None else args.genus,
        crit_count=args.crit,
        cover_genus=args.cover_genus,
        base_sdim=base_sdim,
        algebraically_closed=args.alg_closed,
        char_not_2=args.char_not_2,
        projective=args.projective,
    )


def cmd_fibration(args):
    try:
        spec = _spec_from_args(args)
    except fib.InconsistentInputError as exc:
        raise UsageError(str(exc)) from None
    record = fib.evaluate(spec)
    return record, [record["formula"]]


def cmd_root_stack(args):
    try:
        X = FormalMotive.from_json(_load_json(args.x))
        D = FormalMotive.from_json(_load_json(args.divisor))
        dec = fib.root_stack_decompose(args.r, X, D)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    payload = dec.to_json()
    if not (X.has_opaque or D.has_opaque):
        payload["kim_if_commutative"] = kim(dec.summands).kim
    return payload, ["U(root stack) = U(D)^{r-1} + U(X)"]


def cmd_batch(args):
    try:
        with open(args.file) as fh:
            records = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read batch file: {exc}") from None
    if not isinstance(records, list):
        raise UsageError("batch file must hold a JSON array of fibration records")
    results = fib.run_batch(records)
    return {"results": results}, sorted({r["formula"] for r in results if r["status"] == "ok"})


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kimura", description=__doc__.splitlines()[0])
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", help="list partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("character", help="symmetric group character value")
    p.add_argument("--shape", required=True)
    p.add_argument("--class", dest="cls", required=True)
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("idempotents", help="central idempotents of Q[S_n]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_idempotents)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    p.add_argument("--outer", required=True)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("schur", help="Schur functor of a super-object")
    p.add_argument("--shape", required=True)
    p.add_argument("--sdim", type=int, nargs=2, metavar=("P", "Q"), required=True)
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("kim", help="Kimura dimensions of (p|q)")
    p.add_argument("--sdim", type=int, nargs=2, metavar=("P", "Q"), required=True)
    p.set_defaults(func=cmd_kim)

    p = sub.add_parser("motive", help="Kimura data of a formal motive")
    p.add_argument("--json", required=True, help="JSON array of atoms, or @file")
    p.add_argument("--twist", type=int, default=0)
    p.set_defaults(func=cmd_motive)

    p = sub.add_parser("orbit-compose", help="compose orbit-category morphisms")
    p.add_argument("--json", required=True, help='{"f": ..., "g": ...} or @file')
    p.set_defaults(func=cmd_orbit_compose)

    p = sub.add_parser("unfold", help="unfold g o f = id into a direct summand")
    p.add_argument("--json", required=True, help='{"f": ..., "g": ..., "N": ...} or @file')
    p.add_argument("--N", type=int)
    p.set_defaults(func=cmd_unfold)

    p = sub.add_parser("fibration", help="Kimura dimension of a quadric fibration")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--base-sdim", type=int, nargs=2, metavar=("P", "Q"))
    p.add_argument("--crit", type=int, default=0)
    p.add_argument("--cover-genus", type=int)
    p.add_argument("--alg-closed", action="store_true")
    p.add_argument("--char-not-2", action="store_true")
    p.add_argument("--projective", action="store_true")
    p.set_defaults(func=cmd_fibration)

    p = sub.add_parser("root-stack", help="decompose a root stack")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--x", required=True, help="motive of X (JSON or @file)")
    p.add_argument("--divisor", "--d", dest="divisor", required=True, help="motive of D (JSON or @file)")
    p.set_defaults(func=cmd_root_stack)

    p = sub.add_parser("batch", help="evaluate a JSON array of fibration records")
    p.add_argument("file")
    p.set_defaults(func=cmd_batch)
    return parser


def run(argv=None) -> tuple[int, dict]:
    """Execute a command; returns (exit code, JSON document)."""
    # --pretty is accepted anywhere on the command line
    argv = [a for a in (sys.argv[1:] if argv is None else argv) if a != "--pretty"]
    try:
        args = build_parser().parse_args(argv)
        payload, citations = args.func(args)
    except UsageError as exc:
        return EXIT_USAGE, {"status": "error", "error": {"code": "usage", "message": str(exc)}}
    except fib.HypothesisError as exc:
        return EXIT_HYPOTHESIS, {"status": "error", "error": {
            "code": "hypothesis", "hypothesis": exc.hypothesis, "message": str(exc)}}
    except CrossCheckError as exc:
        return EXIT_CROSSCHECK, {"status": "error", "error": {
            "code": "cross_check", "message": str(exc)}, "payload": exc.payload}
    except (ResourceLimitError, fib.InconsistentInputError, json.JSONDecodeError, OSError) as exc:
        return EXIT_USAGE, {"status": "error", "error": {"code": "usage", "message": str(exc)}}
    return EXIT_OK, {"status": "ok", "payload": payload, "citations": citations}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    code, doc = run(argv)
    pretty = "--pretty" in argv
    print(json.dumps(doc, indent=2 if pretty else None))
    return code


if __name__ == "__main__":
    sys.exit(main())
