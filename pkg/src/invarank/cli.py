"""Command-line front end.

Every subcommand prints a JSON report on stdout (``--output text`` renders a
human-readable form).  All randomness flows from ``--seed``; identical
arguments and seed give byte-identical output.  Exit codes: 0 success,
1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import invariants, invbound, liealg, reptheory
from .fields import FieldError, field_from_spec
from .matrix import Matrix, MatrixError
from .poly import PolyError


class _UsageError(Exception):
    pass


def _parse_rep_arg(src):
    try:
        return reptheory.parse_rep(src)
    except reptheory.RepParseError as exc:
        raise _UsageError(f"bad representation expression: {exc}") from None


def _field_arg(spec):
    try:
        return field_from_spec(spec)
    except FieldError as exc:
        raise _UsageError(str(exc)) from None


def _kind_arg(s):
    try:
        return liealg.AlgebraKind(s)
    except ValueError:
        raise _UsageError(
            f"unknown algebra kind {s!r} (expected gl, sl, so, sp or strict_upper)"
        ) from None


def _load_matrix(path):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise MatrixError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise MatrixError(f"malformed JSON in {path}: {exc}")
    return Matrix.from_json_obj(obj)


def _emit(args, obj, text_renderer=None):
    if args.output == "json":
        print(json.dumps(obj))
    else:
        if text_renderer:
            text_renderer(obj)
        else:
            for k, v in obj.items():
                print(f"{k}: {v}")


def _require_seed(args):
    if args.strategy == "random" and args.seed is None:
        raise _UsageError("--seed is required with the random strategy")


def _strategy_name(s):
    return invbound.SYMBOLIC if s == "symbolic" else invbound.RANDOM_EVAL


def _basis_for(kind, n, field, squarezero):
    if squarezero:
        return liealg.squarezero_basis(kind, n, field)
    return liealg.standard_basis(kind, n, field)


def cmd_basis(args):
    field = _field_arg(args.field)
    kind = _kind_arg(args.kind)
    basis = _basis_for(kind, args.n, field, args.squarezero)
    obj = {"kind": kind.value, "n": args.n, "field": field.spec,
           "squarezero": bool(args.squarezero),
           "count": len(basis.elements),
           "labels": list(basis.labels),
           "elements": [m.to_json_obj() for m in basis.elements]}
    _emit(args, obj)
    return 0


def cmd_star_check(args):
    field = _field_arg(args.field)
    kind = _kind_arg(args.kind)
    squarezero = kind in (liealg.AlgebraKind.sl, liealg.AlgebraKind.sp,
                          liealg.AlgebraKind.strict_upper)
    basis = _basis_for(kind, args.n, field, squarezero)
    report = liealg.verify_star(basis, kind, args.n)
    obj = {"kind": kind.value, "n": args.n, "field": field.spec,
           "basis": "squarezero" if squarezero else "standard"}
    obj.update(report.to_json_obj())
    _emit(args, obj)
    return 0


def cmd_bound(args):
    field = _field_arg(args.field)
    kind = _kind_arg(args.kind)
    expr = _parse_rep_arg(args.rep)
    _require_seed(args)
    report = invbound.invariant_bound(
        kind, args.n, expr, field, strategy=_strategy_name(args.strategy),
        trials=args.trials, seed=args.seed, rep_src=args.rep)
    if not report.star_certified:
        print(f"warning: {kind.value} has no square-zero basis; "
              "bound computed from the standard basis", file=sys.stderr)
    _emit(args, report.to_json_obj())
    return 0


def cmd_rank(args):
    field = _field_arg(args.field)
    kind = _kind_arg(args.kind)
    expr = _parse_rep_arg(args.rep)
    _require_seed(args)
    if kind in (liealg.AlgebraKind.sl, liealg.AlgebraKind.sp,
                liealg.AlgebraKind.strict_upper):
        basis = liealg.squarezero_basis(kind, args.n, field)
    else:
        basis = liealg.standard_basis(kind, args.n, field)
    fields = [invbound.vector_field(reptheory.induced_derivative_action(expr, b))
              for b in basis.elements]
    report = invbound.generic_rank(fields, strategy=_strategy_name(args.strategy),
                                   trials=args.trials, seed=args.seed)
    obj = {"kind": kind.value, "n": args.n, "rep": args.rep}
    obj.update(report.to_json_obj())
    _emit(args, obj)
    return 0


def cmd_lf(args):
    gram = _load_matrix(args.gram)
    report = liealg.lf_algebra(gram)
    _emit(args, report.to_json_obj())
    return 0


def cmd_identity_decomp(args):
    mats = liealg.identity_decomposition_char2(args.n)
    total = mats[0]
    for m in mats[1:]:
        total = total + m
    obj = {"n": args.n, "count": len(mats),
           "all_square_zero": all(liealg.is_square_zero(m) for m in mats),
           "sums_to_identity": total == Matrix.identity(mats[0].field, args.n),
           "matrices": [m.to_json_obj() for m in mats]}
    _emit(args, obj)
    return 0


def cmd_classify2x2(args):
    mat = _load_matrix(args.matrix)
    result = invariants.classify_2x2(mat)
    _emit(args, result.to_json_obj())
    return 0


def cmd_invcheck(args):
    field = _field_arg(args.field)
    kind = _kind_arg(args.kind)
    expr = _parse_rep_arg(args.rep)
    inv = invariants.builtin_invariant(args.name)
    squarezero = kind in (liealg.AlgebraKind.sl, liealg.AlgebraKind.sp,
                          liealg.AlgebraKind.strict_upper)
    basis = _basis_for(kind, args.n, field, squarezero)
    fields = [invbound.vector_field(reptheory.induced_derivative_action(expr, b))
              for b in basis.elements]
    annihilated = all(invariants.annihilation_check(vf, inv) for vf in fields)
    group_ok = None
    if squarezero:
        if args.seed is None:
            raise _UsageError("--seed is required for the group invariance check")
        group_ok = invariants.group_invariance_check(
            expr, inv, basis, samples=args.samples, seed=args.seed)
    obj = {"invariant": args.name, "kind": kind.value, "n": args.n,
           "rep": args.rep, "basis": "squarezero" if squarezero else "standard",
           "annihilation": annihilated, "group_invariance": group_ok,
           "samples": args.samples if group_ok is not None else 0,
           "seed": args.seed}
    _emit(args, obj)
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="invarank",
        description="Square-zero bases of matrix Lie algebras and generic-rank "
                    "bounds on the number of independent invariant functions.")
    top.add_argument("--output", choices=("json", "text"), default="json")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, field=True, seed=False):
        # SUPPRESS keeps a top-level --output from being clobbered
        p.add_argument("--output", choices=("json", "text"),
                       default=argparse.SUPPRESS)
        if field:
            p.add_argument("--field", default="q",
                           help="ground field: 'q' or 'p:<prime>' (default q)")
        if seed:
            p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("basis", help="print a basis of a matrix Lie algebra")
    p.add_argument("kind")
    p.add_argument("n", type=int)
    p.add_argument("--squarezero", action="store_true")
    common(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("star-check", help="verify the square-zero basis property")
    p.add_argument("kind")
    p.add_argument("n", type=int)
    common(p)
    p.set_defaults(func=cmd_star_check)

    p = sub.add_parser("bound", help="bound the number of independent invariants")
    p.add_argument("kind")
    p.add_argument("n", type=int)
    p.add_argument("rep", help="representation expression, e.g. 'V + S2(V)'")
    p.add_argument("--strategy", choices=("random", "symbolic"), default="random")
    p.add_argument("--trials", type=int, default=invbound.DEFAULT_TRIALS)
    common(p, seed=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("rank", help="generic rank of the invariant vector fields")
    p.add_argument("kind")
    p.add_argument("n", type=int)
    p.add_argument("rep")
    p.add_argument("--strategy", choices=("random", "symbolic"), default="random")
    p.add_argument("--trials", type=int, default=invbound.DEFAULT_TRIALS)
    common(p, seed=True)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("lf", help="characteristic-2 self-adjoint algebra of a "
                                  "Gram matrix (JSON file over GF(2))")
    p.add_argument("gram")
    common(p, field=False)
    p.set_defaults(func=cmd_lf)

    p = sub.add_parser("identity-decomp",
                       help="square-zero decomposition of the identity over GF(2)")
    p.add_argument("n", type=int)
    common(p, field=False)
    p.set_defaults(func=cmd_identity_decomp)

    p = sub.add_parser("classify2x2",
                       help="first-integral class of a 2x2 rational matrix flow")
    p.add_argument("matrix", help="matrix JSON file")
    common(p, field=False)
    p.set_defaults(func=cmd_classify2x2)

    p = sub.add_parser("invcheck", help="verify a built-in invariant")
    p.add_argument("name", help="I1, I1dual or I2")
    p.add_argument("kind")
    p.add_argument("n", type=int)
    p.add_argument("rep")
    p.add_argument("--samples", type=int, default=20)
    common(p, seed=True)
    p.set_defaults(func=cmd_invcheck)

    return top


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FieldError, MatrixError, PolyError, liealg.LieAlgError,
            invbound.BoundError, invariants.InvariantError,
            reptheory.RepParseError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
