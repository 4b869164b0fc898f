"""Command-line interface.

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or
configuration error.  Stdout is byte-identical across runs with the same
flags and seed; wall times go to stderr and only with --timings.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import LoopSchurError
from .polyring import Polynomial, serialize
from .shapes import Partition, enumerate_border_strips
from .tableaux import ShiftParams, loop_power_sum, loop_schur, shifted_loop_schur
from .verify import (
    DEFAULT_CAP,
    VerificationReport,
    check_involution,
    check_specialization,
    default_grid_config,
    parse_grid_config,
    run_grid,
    verify_degree_bound,
    verify_expansion,
    verify_murnaghan_nakayama,
)


def _partition(text: str) -> Partition:
    try:
        return Partition.from_text(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "structured"), default="text",
                   help="text output or canonical JSON")
    p.add_argument("--timings", action="store_true",
                   help="report wall times on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopschur",
        description="Loop Schur functions, border-strip expansions, and their pairing maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schur", help="print a (shifted) truncated loop Schur function")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--l", type=int, default=0)
    _add_format(p)

    p = sub.add_parser("power-sum", help="print a truncated loop power sum")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("border-strips", help="list border-strip enlargements of length k*n")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    _add_format(p)

    p = sub.add_parser("mn-verify",
                       help="check the power-sum product against the signed border-strip sum")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("thm2-verify",
                       help="check the degree floor of the signed shifted border-strip sum")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("lemma-verify",
                       help="check one of the three signed-family expansion identities")
    p.add_argument("--which", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    _add_format(p)

    p = sub.add_parser("involution-check", help="exercise one pairing map over its family")
    p.add_argument("--which", choices=("I1", "I2", "I3", "I4"), required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--l", type=int, default=0)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exhaustive", action="store_true")
    group.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    _add_format(p)

    p = sub.add_parser("specialize-check",
                       help="compare the color-forgetting specialization with the determinant oracle")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("grid", help="run a configured batch of checks")
    p.add_argument("--config", help="config file; the built-in default grid when omitted")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    _add_format(p)

    return parser


def _emit_polynomial(poly: Polynomial, fmt: str) -> None:
    print(serialize(poly) if fmt == "structured" else str(poly))


def _emit_report(report: VerificationReport, args) -> int:
    print(report.to_json() if args.format == "structured" else report.text())
    if args.timings:
        print(f"# {report.check} {report.wall_time_s:.3f}s", file=sys.stderr)
    return 0 if report.passed else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (LoopSchurError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.command == "schur":
        shift = ShiftParams(args.n, args.l)
        poly = (loop_schur(args.lam, args.n, args.N) if args.l == 0
                else shifted_loop_schur(args.lam, shift, args.N))
        _emit_polynomial(poly, args.format)
        return 0

    if args.command == "power-sum":
        _emit_polynomial(loop_power_sum(args.k, args.n, args.N), args.format)
        return 0

    if args.command == "border-strips":
        strips = enumerate_border_strips(args.lam, args.k * args.n)
        if args.format == "structured":
            doc = {
                "lambda": list(args.lam.parts),
                "length": args.k * args.n,
                "strips": [
                    {"sigma": list(b.sigma.parts), "height": b.height} for b in strips
                ],
            }
            print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
        else:
            for b in strips:
                print(f"sigma={b.sigma} height={b.height}")
        return 0

    if args.command == "mn-verify":
        return _emit_report(
            verify_murnaghan_nakayama(args.lam, args.n, args.k, args.N), args
        )

    if args.command == "thm2-verify":
        return _emit_report(
            verify_degree_bound(args.lam, args.n, args.k, args.N, args.l), args
        )

    if args.command == "lemma-verify":
        return _emit_report(
            verify_expansion(args.which, args.lam, args.n, args.k, args.N, args.cap), args
        )

    if args.command == "involution-check":
        mode = "samples" if args.samples is not None else "exhaustive"
        return _emit_report(
            check_involution(
                args.which, args.lam, args.n, args.k, args.N, l=args.l, mode=mode,
                samples=args.samples or 1000, seed=args.seed, cap=args.cap,
            ),
            args,
        )

    if args.command == "specialize-check":
        return _emit_report(check_specialization(args.lam, args.n, args.N), args)

    if args.command == "grid":
        if args.config is None:
            text = default_grid_config()
        else:
            with open(args.config, "r", encoding="utf-8") as handle:
                text = handle.read()
        entries = parse_grid_config(text)
        reports = run_grid(entries, seed=args.seed, cap=args.cap)
        failed = 0
        for report in reports:
            print(report.to_json() if args.format == "structured" else report.text())
            if args.timings:
                print(f"# {report.check} {report.wall_time_s:.3f}s", file=sys.stderr)
            if not report.passed:
                failed += 1
        summary = {"checks": len(reports), "failed": failed}
        if args.format == "structured":
            print(json.dumps({"summary": summary}, sort_keys=True, separators=(",", ":")))
        else:
            print(f"grid: {len(reports) - failed}/{len(reports)} passed")
        return 1 if failed else 0

    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
