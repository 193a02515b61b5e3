"""Command-line interface.

Exit codes: 0 when the queried object is completable (or the command just
succeeds), 2 when it is decidably not completable, 1 on input errors, so
shell pipelines can branch on completability.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import io as rio
from .completability import analyze
from .completion import count_complex_completions, enumerate_real_completions
from .diagonal import build_description, diagonal_membership, nth_root_sum_oracle
from .errors import RankOneError
from .jacobian import (
    antidiag222_constraint_poly,
    jacobian_identity_check,
    linear_factor,
    simplex_membership_antidiag222,
    simplex_parametrization,
)
from .segre import matroid_closure


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _parse_point(text: str) -> list[Fraction]:
    try:
        return [Fraction(part.strip()) for part in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise RankOneError(f"malformed point {text!r}") from exc


def _cmd_check(args) -> int:
    tensor = rio.load_tensor(args.file)
    report = analyze(tensor)
    _emit(rio.report_to_json(report))
    return 0 if report.complex_completable else 2


def _cmd_complete(args) -> int:
    tensor = rio.load_tensor(args.file)
    if args.field == "complex-count":
        _emit({"complex_preimage_count": count_complex_completions(tensor)})
        return 0
    completions = enumerate_real_completions(tensor)
    _emit(
        {
            "count": len(completions),
            "completions": [
                rio.completion_to_json(c, digits=args.digits, include_witness=args.all)
                for c in completions
            ],
        }
    )
    return 0


def _cmd_closure(args) -> int:
    tensor = rio.load_tensor(args.file)
    closure = matroid_closure(tensor.domain, tensor.sorted_indices())
    complement = [i for i in tensor.domain.tuples() if i not in closure]
    _emit(
        {
            "closure": [list(i) for i in sorted(closure)],
            "not_finitely_completable": [list(i) for i in complement],
        }
    )
    return 0


def _cmd_jacobian(args) -> int:
    tensor = rio.load_tensor(args.file)
    observed = list(tensor.entries)  # document listing order fixes the row order
    p = simplex_parametrization(tensor.domain, observed)
    fac = linear_factor(p)
    verdict = jacobian_identity_check(p, fac, trials=args.trials, seed=args.seed)
    _emit(
        {
            "observed": [list(i) for i in p.observed],
            "alpha": {
                f"{j},{k}": a for (j, k), a in sorted(fac.alpha.items())
            },
            "incidence_matrix": [list(r) for r in fac.incidence],
            "kernel_vector": list(fac.kernel_vector),
            "linear_factor": fac.linear_factor.to_text(),
            "monomial_factor": fac.monomial_factor.to_text(),
            "identity_check": verdict,
            "trials": args.trials,
            "seed": args.seed,
        }
    )
    return 0


def _cmd_diagonal(args) -> int:
    desc = build_description(args.n, args.d)
    out = {
        "n": args.n,
        "d": args.d,
        "compressed_poly": desc.compressed.to_text(),
        "inequalities": [p.to_text() for p in desc.inequalities],
    }
    code = 0
    if args.point is not None:
        point = _parse_point(args.point)
        member = diagonal_membership(args.n, args.d, point)
        oracle = nth_root_sum_oracle(args.n, point)
        out["point"] = [rio.format_rational(v) for v in point]
        out["membership"] = member
        out["oracle"] = oracle.value
        code = 0 if member else 2
    _emit(out)
    return code


def _cmd_antidiag222(args) -> int:
    point = _parse_point(args.point)
    if len(point) != 3:
        raise RankOneError("antidiag222 needs exactly three values")
    member = simplex_membership_antidiag222(*point)
    _emit(
        {
            "point": [rio.format_rational(v) for v in point],
            "membership": member,
            "constraint_poly": antidiag222_constraint_poly(*point).to_text("x"),
        }
    )
    return 0 if member else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankone",
        description="Exact rank-one completability of partial tensors",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="full completability report for a tensor document")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("complete", help="enumerate real completions")
    p.add_argument("file")
    p.add_argument(
        "--field",
        choices=["real", "complex-count"],
        default="real",
        help="enumerate real completions, or just count complex preimages",
    )
    p.add_argument("--all", action="store_true", help="include full witness tensors")
    p.add_argument("--digits", type=int, default=12, help="decimal display digits")
    p.set_defaults(fn=_cmd_complete)

    p = sub.add_parser("closure", help="finitely determined entries")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_closure)

    p = sub.add_parser(
        "jacobian", help="boundary-factor analysis (needs |E| = sum(d_j - 1))"
    )
    p.add_argument("file")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn=_cmd_jacobian)

    p = sub.add_parser("diagonal", help="diagonal completable region description")
    p.add_argument("--n", type=int, required=True, help="tensor order")
    p.add_argument("--d", type=int, required=True, help="diagonal length")
    p.add_argument("--point", default=None, help="comma-separated rationals to test")
    p.set_defaults(fn=_cmd_diagonal)

    p = sub.add_parser("antidiag222", help="2x2x2 antidiagonal membership test")
    p.add_argument("--point", required=True, help="x112,x121,x211")
    p.set_defaults(fn=_cmd_antidiag222)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (RankOneError, ValueError) as exc:
        code = getattr(exc, "code", "bad-input")
        json.dump(
            {"error": {"code": code, "message": str(exc)}},
            sys.stderr,
            indent=2,
        )
        sys.stderr.write("\n")
        from .errors import NotCompletableError

        return 2 if isinstance(exc, NotCompletableError) else 1


if __name__ == "__main__":
    raise SystemExit(main())
