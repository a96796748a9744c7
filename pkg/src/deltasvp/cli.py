"""Command-line interface.

Subcommands map one-to-one onto the library: ``svp`` for the solver and the
enumeration oracles, ``gen`` for instance constructions, ``check`` for
matrix measurements and identity sweeps, ``verify`` for the polyhedral
verifiers, and ``matrix`` for plain utilities.  Output is deterministic:
identical invocations produce identical bytes (JSON metadata gains a
timestamp only under ``--stamp``).  Row and column indices in all output
are 0-based.

Exit codes: 0 success / verified; 1 usage or parse error; 2 precondition
violation (rank, threshold, boundedness, domain); 3 enumeration budget
exceeded; 4 a verification found a counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Sequence

from . import generators, linalg, oracle, polyhedra, sweeps, textio, threshold
from .errors import BudgetExceededError, DeltaSvpError
from .linalg import IntMatrix

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3
EXIT_FAILED_VERIFICATION = 4


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; this CLI reserves 2 for
    precondition violations, so remap usage errors to 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _matrix_json(m: IntMatrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[str(x) for x in row] for row in m.entries],
    }


def _vector_json(v: Sequence[int]) -> list[str]:
    return [str(x) for x in v]


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _read_matrix(path: str) -> IntMatrix:
    return textio.parse_matrix(Path(path).read_text())


def _outcome_json(result) -> dict:
    if isinstance(result, threshold.ShortVector):
        return {
            "kind": "short_vector",
            "z": _vector_json(result.z),
            "y": _vector_json(result.y),
            "norm": result.norm,
        }
    if isinstance(result, threshold.Certificate):
        return {
            "kind": "certificate",
            "rows": list(result.rows),
            "det": str(result.det_value),
        }
    return {
        "kind": "oracle_minimum",
        "z": _vector_json(result.z),
        "y": _vector_json(result.y),
        "norm": result.norm,
    }


def _print_outcome(result, as_json: bool) -> None:
    if as_json:
        _print_json(_outcome_json(result))
        return
    if isinstance(result, threshold.ShortVector):
        print(f"short vector: z = {list(result.z)}  y = {list(result.y)}  norm = 1")
    elif isinstance(result, threshold.Certificate):
        print(
            f"certificate: rows {list(result.rows)} have |det| = "
            f"{abs(result.det_value)} (det = {result.det_value})"
        )
    else:
        print(
            f"oracle minimum: z = {list(result.z)}  y = {list(result.y)}  "
            f"norm = {result.norm}"
        )


def _cmd_svp_solve(args) -> int:
    a = _read_matrix(args.file)
    result = threshold.solve_svp(a, args.delta)
    _print_outcome(result, args.json)
    return EXIT_OK


def _cmd_svp_oracle(args) -> int:
    a = _read_matrix(args.file)
    bound = args.bound if args.bound is not None else oracle.enum_bound(a)
    kwargs = {} if args.budget is None else {"budget": args.budget}
    result = oracle.brute_force_svp(a, bound, **kwargs)
    if args.json:
        payload = _outcome_json(result)
        payload["bound"] = bound
        _print_json(payload)
    else:
        print(f"box radius: {bound}")
        _print_outcome(result, False)
    return EXIT_OK


def _cmd_svp_atleast2(args) -> int:
    a = _read_matrix(args.file)
    kwargs = {} if args.budget is None else {"budget": args.budget}
    decided, witness = oracle.shortest_is_at_least_2(a, **kwargs)
    if args.json:
        payload = {"shortest_is_at_least_2": decided}
        if witness is not None:
            payload["witness"] = _vector_json(witness)
            payload["witness_image"] = _vector_json(a.matvec(witness))
        _print_json(payload)
    elif decided:
        print("every nonzero lattice vector has norm >= 2")
    else:
        print(f"norm <= 1 witness: z = {list(witness)}  y = {list(a.matvec(witness))}")
    return EXIT_OK


def _gen_payload(args, name: str, matrix: IntMatrix, extra: dict) -> int:
    if args.json:
        payload = {"construction": name, "matrix": _matrix_json(matrix)}
        payload.update(extra)
        if args.stamp:
            payload["generated_at"] = datetime.now(timezone.utc).isoformat()
        _print_json(payload)
    else:
        sys.stdout.write(textio.format_matrix(matrix))
    return EXIT_OK


def _cmd_gen_lower_bound(args) -> int:
    matrix = generators.lower_bound_instance(args.delta)
    return _gen_payload(args, "lower-bound", matrix, {"delta": args.delta})


def _cmd_gen_sparsity(args) -> int:
    matrix, b = generators.sparsity_instance(args.delta)
    if args.json:
        payload = {
            "construction": "sparsity",
            "delta": args.delta,
            "matrix": _matrix_json(matrix),
            "b": _vector_json(b),
        }
        if args.stamp:
            payload["generated_at"] = datetime.now(timezone.utc).isoformat()
        _print_json(payload)
    else:
        sys.stdout.write(textio.format_polyhedron(matrix, b))
    return EXIT_OK


def _cmd_gen_random(args) -> int:
    matrix = generators.random_delta_modular(args.delta, args.rows, args.cols, args.seed)
    return _gen_payload(
        args,
        "random",
        matrix,
        {
            "delta": args.delta,
            "seed": args.seed,
            "generator_version": generators.GENERATOR_VERSION,
        },
    )


def _cmd_check_delta(args) -> int:
    a = _read_matrix(args.file)
    kwargs = {} if args.budget is None else {"budget": args.budget}
    largest, witness = linalg.max_abs_full_rank_subdet(a, **kwargs)
    is_modular = largest <= args.delta
    totally = None
    if args.total:
        totally = linalg.is_totally_delta_modular(a, args.delta, **kwargs)
    if args.json:
        payload = {
            "max_abs_subdet": str(largest),
            "witness_rows": list(witness),
            "delta": args.delta,
            "delta_modular": is_modular,
        }
        if totally is not None:
            payload["totally_delta_modular"] = totally
        _print_json(payload)
    else:
        print(f"max |full-rank subdeterminant| = {largest} at rows {list(witness)}")
        print(f"delta-modular for delta = {args.delta}: {'yes' if is_modular else 'no'}")
        if totally is not None:
            print(
                f"totally delta-modular for delta = {args.delta}: "
                f"{'yes' if totally else 'no'}"
            )
    return EXIT_OK


def _sweep_result(report: sweeps.SweepReport, as_json: bool) -> int:
    if as_json:
        _print_json(
            {
                "name": report.name,
                "trials": report.trials,
                "failures": report.failures,
                "first_failure": report.first_failure,
                "passed": report.passed,
            }
        )
    else:
        print("\n".join(report.lines()))
    return EXIT_OK if report.passed else EXIT_FAILED_VERIFICATION


def _cmd_check_detratio(args) -> int:
    return _sweep_result(sweeps.ratio_identity_sweep(args.trials, args.seed), args.json)


def _cmd_check_kernel(args) -> int:
    return _sweep_result(sweeps.kernel_identity_sweep(args.trials, args.seed), args.json)


def _cmd_verify_facedim(args) -> int:
    a, b = textio.parse_polyhedron(Path(args.file).read_text())
    kwargs = {} if args.budget is None else {"budget": args.budget}
    report = polyhedra.verify_face_dimension_bound(
        polyhedra.PolyhedronH(a, b), args.delta, **kwargs
    )
    if args.json:
        _print_json(
            {
                "delta": report.delta,
                "bound": report.bound,
                "vertices": [
                    {"vertex": _vector_json(v), "face_dimension": d}
                    for v, d in report.entries
                ],
                "passed": report.passed,
            }
        )
    else:
        print("\n".join(report.lines()))
    return EXIT_OK if report.passed else EXIT_FAILED_VERIFICATION


def _cmd_verify_support(args) -> int:
    a, b, c = textio.parse_standard_form(Path(args.file).read_text())
    if c is None:
        c = tuple([0] * a.cols)
    ilp = polyhedra.StandardFormILP(a, b, c)
    if args.box is not None:
        box = tuple([args.box] * a.cols)
    else:
        derived = polyhedra.derive_box(a, b)
        if derived is None:
            raise DeltaSvpError(
                "cannot derive a complete enumeration box from the rows; "
                "pass an explicit --box"
            )
        box = derived
    kwargs = {} if args.budget is None else {"budget": args.budget}
    report = polyhedra.verify_support_bound(ilp, args.delta, box, **kwargs)
    if args.json:
        _print_json(
            {
                "delta": report.delta,
                "bound": report.bound,
                "box": list(box),
                "optimal_value": None
                if report.optimal_value is None
                else str(report.optimal_value),
                "min_support": report.min_support,
                "optimizer_count": report.optimizer_count,
                "passed": report.passed,
            }
        )
    else:
        print(f"enumeration box: {list(box)}")
        print("\n".join(report.lines()))
    return EXIT_OK if report.passed else EXIT_FAILED_VERIFICATION


def _cmd_verify_sparsity(args) -> int:
    kwargs = {} if args.budget is None else {"budget": args.budget}
    report = polyhedra.verify_sparsity_construction(args.delta, **kwargs)
    if args.json:
        _print_json(
            {
                "delta": report.delta,
                "m": report.m,
                "n": report.n,
                "box": list(report.box),
                "solutions": [_vector_json(s) for s in report.solutions],
                "support": report.support,
                "expected_support": report.expected_support,
                "totally_delta_modular": report.totally_modular,
                "passed": report.passed,
            }
        )
    else:
        print("\n".join(report.lines()))
    return EXIT_OK if report.passed else EXIT_FAILED_VERIFICATION


def _cmd_matrix_det(args) -> int:
    print(linalg.det(_read_matrix(args.file)))
    return EXIT_OK


def _cmd_matrix_rank(args) -> int:
    print(linalg.rank(_read_matrix(args.file)))
    return EXIT_OK


def _cmd_matrix_hnf(args) -> int:
    h, u = linalg.hnf(_read_matrix(args.file))
    if args.json:
        _print_json({"h": _matrix_json(h), "u": _matrix_json(u)})
    else:
        sys.stdout.write("# H\n" + textio.format_matrix(h))
        sys.stdout.write("# U\n" + textio.format_matrix(u))
    return EXIT_OK


def _add_json(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, default=None, help="enumeration budget override")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="deltasvp", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    svp = sub.add_parser("svp", help="solver and enumeration oracles")
    svp_sub = svp.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = svp_sub.add_parser("solve", help="dispatching solver (threshold or oracle)")
    p.add_argument("--delta", type=int, required=True)
    _add_json(p)
    p.add_argument("file")
    p.set_defaults(func=_cmd_svp_solve)

    p = svp_sub.add_parser("oracle", help="complete box enumeration")
    p.add_argument("--bound", type=int, default=None, help="box radius (default: derived)")
    _add_budget(p)
    _add_json(p)
    p.add_argument("file")
    p.set_defaults(func=_cmd_svp_oracle)

    p = svp_sub.add_parser("atleast2", help="decide: no lattice vector of norm < 2")
    _add_budget(p)
    _add_json(p)
    p.add_argument("file")
    p.set_defaults(func=_cmd_svp_atleast2)

    gen = sub.add_parser("gen", help="instance generators")
    gen_sub = gen.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = gen_sub.add_parser("lower-bound", help="delta-modular matrix with no norm-1 vector")
    p.add_argument("--delta", type=int, required=True)
    _add_json(p)
    p.add_argument("--stamp", action="store_true", help="include a timestamp in JSON metadata")
    p.set_defaults(func=_cmd_gen_lower_bound)

    p = gen_sub.add_parser("sparsity", help="system whose only solution is all-ones")
    p.add_argument("--delta", type=int, required=True)
    _add_json(p)
    p.add_argument("--stamp", action="store_true", help="include a timestamp in JSON metadata")
    p.set_defaults(func=_cmd_gen_sparsity)

    p = gen_sub.add_parser("random", help="seeded random delta-modular matrix")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    _add_json(p)
    p.add_argument("--stamp", action="store_true", help="include a timestamp in JSON metadata")
    p.set_defaults(func=_cmd_gen_random)

    check = sub.add_parser("check", help="measurements and identity sweeps")
    check_sub = check.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = check_sub.add_parser("delta", help="largest full-rank subdeterminant")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--total", action="store_true", help="also check every square minor")
    _add_budget(p)
    _add_json(p)
    p.add_argument("file")
    p.set_defaults(func=_cmd_check_delta)

    p = check_sub.add_parser("detratio", help="random determinant-ratio identity sweep")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=_cmd_check_detratio)

    p = check_sub.add_parser("kernel", help="random kernel determinant identity sweep")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=_cmd_check_kernel)

    verify = sub.add_parser("verify", help="polyhedral verifiers")
    verify_sub = verify.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = verify_sub.add_parser("facedim", help="integer-hull vertices sit on small faces")
    p.add_argument("--delta", type=int, required=True)
    _add_budget(p)
    _add_json(p)
    p.add_argument("file", help="matrix plus 'b:' line")
    p.set_defaults(func=_cmd_verify_facedim)

    p = verify_sub.add_parser("support", help="optimal solutions have small support")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--box", type=int, default=None, help="uniform per-variable bound")
    _add_budget(p)
    _add_json(p)
    p.add_argument("file", help="matrix plus 'b:' line, optional 'c:' line")
    p.set_defaults(func=_cmd_verify_support)

    p = verify_sub.add_parser("sparsity", help="dense-support construction is tight")
    p.add_argument("--delta", type=int, required=True)
    _add_budget(p)
    _add_json(p)
    p.set_defaults(func=_cmd_verify_sparsity)

    matrix = sub.add_parser("matrix", help="plain matrix utilities")
    matrix_sub = matrix.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = matrix_sub.add_parser("det", help="exact determinant")
    p.add_argument("file")
    p.set_defaults(func=_cmd_matrix_det)

    p = matrix_sub.add_parser("rank", help="exact rank")
    p.add_argument("file")
    p.set_defaults(func=_cmd_matrix_rank)

    p = matrix_sub.add_parser("hnf", help="column-style Hermite normal form")
    _add_json(p)
    p.add_argument("file")
    p.set_defaults(func=_cmd_matrix_hnf)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except textio.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DeltaSvpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
