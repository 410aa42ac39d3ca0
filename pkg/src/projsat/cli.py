"""Command-line front end: solve, enumerate, trace, and self-verify.

Exit codes follow the SAT-competition convention: 10 for SAT, 20 for
UNSAT, 0 for a successful --mode verify run, 1 for usage, parse, or
runtime errors.  Human output uses 's' and 'v' lines; --json emits one
object mirroring the SolveResult instead.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .cnf import CnfFormula, DimacsParseError, parse_dimacs
from .engine import EnumerationCapError
from .oracle import formula_satisfied
from .solver import SolveConfig, SolveResult, SolveStatus, solve

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_SAT = 10
EXIT_UNSAT = 20


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="projsat",
        description="Decide CNF satisfiability by chained projective reduction.")
    parser.add_argument("--input", metavar="PATH",
                        help="DIMACS CNF file (default: read stdin)")
    parser.add_argument("--mode", choices=("solve", "all", "trace", "verify"),
                        default="solve",
                        help="solve: one witness; all: every solution; "
                             "trace: per-step chain dump; verify: solve plus "
                             "oracle cross-checks, exit 0 on success")
    parser.add_argument("--threads", type=int, default=1,
                        help="parallel reduction workers (default 1)")
    parser.add_argument("--order", choices=("input", "size"), default="input",
                        help="factor order: input sequence or ascending clause width")
    parser.add_argument("--oracle-check", action="store_true",
                        help="cross-check the final factor against the "
                             "exhaustive truth table (implied by --mode verify)")
    parser.add_argument("--json", action="store_true",
                        help="emit one JSON object instead of s/v lines")
    parser.add_argument("--max-enum", type=int, default=None, metavar="COUNT",
                        help="point cap for --mode all (default 2^24)")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse flags, solve, print, and return the process exit code."""
    parser = _build_parser()
    try:
        opts = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse prints its own message; --help exits 0, usage errors 1
        return EXIT_OK if exc.code == 0 else EXIT_ERROR

    try:
        if opts.input:
            with open(opts.input, "rb") as handle:
                formula = parse_dimacs(handle)
        else:
            formula = parse_dimacs(sys.stdin.buffer.read())
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except DimacsParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    try:
        cfg = SolveConfig(
            factor_order=opts.order,
            threads=opts.threads,
            trace=opts.mode == "trace",
            enumerate_all=opts.mode == "all",
            oracle_check=opts.oracle_check or opts.mode == "verify",
        )
        if opts.max_enum is not None:
            cfg.enum_cap = opts.max_enum
        result = solve(formula, cfg)
    except (EnumerationCapError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    if opts.mode == "verify":
        return _verify(formula, result, opts)
    _emit(result, opts)
    return EXIT_SAT if result.status is SolveStatus.SAT else EXIT_UNSAT


def _witness_line(point: Sequence[int]) -> str:
    lits = [str(i + 1) if bit else str(-(i + 1)) for i, bit in enumerate(point)]
    return "v " + " ".join(lits + ["0"])


def _emit(result: SolveResult, opts) -> None:
    if opts.json:
        print(json.dumps(result.to_json_dict(), indent=2, sort_keys=True))
        return
    if opts.mode == "trace" and result.chain is not None:
        for lineno, step in enumerate(result.chain, start=1):
            if step.projection is not None and step.projection.off_point is not None:
                off = "".join(str(b) for b in step.projection.off_point)
            else:
                off = "-"
            print(f"c step {lineno}: factor size {step.size}, off-point {off}")
            if step.projection is not None:
                for line in step.projection.dump():
                    print(f"c   {line}")
    if result.status is SolveStatus.SAT:
        print("s SATISFIABLE")
        if opts.mode == "all" and result.all_solutions is not None:
            for point in result.all_solutions:
                print(_witness_line(point))
        elif result.witness is not None:
            print(_witness_line(result.witness))
    else:
        print("s UNSATISFIABLE")


def _verify(formula: CnfFormula, result: SolveResult, opts) -> int:
    # solve() already compared the final factor against the exhaustive
    # table (oracle_check is forced on for this mode) without raising.
    checks = ["final factor agrees with the exhaustive truth table"]
    if result.status is SolveStatus.SAT:
        if result.witness is None or not formula_satisfied(formula, result.witness):
            print("error: witness fails clause-by-clause evaluation",
                  file=sys.stderr)
            return EXIT_ERROR
        checks.append("witness satisfies every clause")
    else:
        checks.append("oracle confirms unsatisfiability")
    if opts.json:
        payload = result.to_json_dict()
        payload["verified"] = checks
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in checks:
            print(f"c verified: {line}")
        print("s SATISFIABLE" if result.status is SolveStatus.SAT
              else "s UNSATISFIABLE")
        if result.witness is not None:
            print(_witness_line(result.witness))
    return EXIT_OK


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
