"""Command line: ``ampbisect {estimate,sample,compare,verify}``.

Exit status: 0 success, 2 bad input (arguments, state files, domain
errors), 3 a verification suite failed.
"""
from __future__ import annotations

import argparse
import contextlib
import math
import sys

from . import experiments
from .files import dumps, write_csv, write_jsonl
from .verify import SUITES, run_verify

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERIFY = 3

_U64 = 2 ** 64


def _random_spec(text: str) -> tuple[int, int]:
    try:
        n, seed = text.split(":")
        n, seed = int(n), int(seed)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected <n>:<seed>, got {text!r}")
    if n < 1 or not 0 <= seed < _U64:
        raise argparse.ArgumentTypeError(f"need n >= 1 and 0 <= seed < 2^64, got {text!r}")
    return n, seed


def _init_spec(text: str) -> tuple[str, float | None]:
    if text in ("midpoint", "random"):
        return text, None
    if text.startswith("fixed:"):
        try:
            beta = float(text[len("fixed:"):])
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad fixed angle in {text!r}")
        if not 0.0 <= beta <= math.pi / 2:
            raise argparse.ArgumentTypeError(f"fixed angle must lie in [0, pi/2], got {beta}")
        return "fixed", beta
    raise argparse.ArgumentTypeError(f"expected midpoint, random or fixed:<beta>, got {text!r}")


def _seed(text: str) -> int:
    v = int(text)
    if not 0 <= v < _U64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return v


def _add_state_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--state", metavar="PATH", help="state file (JSON with num_qubits and amplitudes or angles)")
    src.add_argument("--random", metavar="N:SEED", type=_random_spec, help="seeded random nonnegative state")
    src.add_argument("--frqi", metavar="PATH", help="file of per-qubit angles; builds the product state")


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", dest="fmt", choices=("json-lines", "csv"), default="json-lines")
    p.add_argument("--out", metavar="PATH", help="output file (default: standard output)")


def _add_target_args(p: argparse.ArgumentParser) -> None:
    tgt = p.add_mutually_exclusive_group()
    tgt.add_argument("--k", type=int, help="basis index to estimate")
    tgt.add_argument("--all-k", action="store_true", help="estimate every basis amplitude")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ampbisect", description="Binary-search amplitude measurement simulator.")
    sub = parser.add_subparsers(dest="command", required=True)

    est = sub.add_parser("estimate", help="estimate amplitudes by binary search")
    _add_state_args(est)
    _add_target_args(est)
    est.add_argument(
        "--method", choices=("auto", "single", "multi", "separable"), default="auto",
        help="auto: single for a 1-qubit state without --k/--all-k, otherwise multi",
    )
    budget = est.add_mutually_exclusive_group(required=True)
    budget.add_argument("--iters", type=int, help="number of halvings m")
    budget.add_argument("--error", type=_positive_float, help="target angle error; m is derived")
    est.add_argument("--init", type=_init_spec, default=("midpoint", None), help="midpoint | random | fixed:<beta>")
    est.add_argument("--seed", type=_seed, default=0)
    _add_output_args(est)

    smp = sub.add_parser("sample", help="shot-sampling baseline estimator")
    _add_state_args(smp)
    shots = smp.add_mutually_exclusive_group(required=True)
    shots.add_argument("--shots", type=int, help="number of shots")
    shots.add_argument("--error", type=_positive_float, help="target angle error; shots = ceil(2^n / error^2)")
    smp.add_argument("--seed", type=_seed, default=0)
    _add_output_args(smp)

    cmp_ = sub.add_parser("compare", help="binary search vs shot sampling at a matched target error")
    _add_state_args(cmp_)
    _add_target_args(cmp_)
    cmp_.add_argument("--error", type=_positive_float, required=True)
    cmp_.add_argument("--init", type=_init_spec, default=("midpoint", None))
    cmp_.add_argument("--seed", type=_seed, default=0)
    cmp_.add_argument("--timing", metavar="PATH", help="write wall-time record here (kept out of the report body)")
    _add_output_args(cmp_)

    ver = sub.add_parser("verify", help="run the invariant suites")
    ver.add_argument("--suite", action="append", choices=sorted(SUITES), help="run only these suites")
    _add_output_args(ver)
    return parser


def _spec(args, mode: str) -> experiments.ExperimentSpec:
    init, beta0 = getattr(args, "init", ("midpoint", None))
    return experiments.ExperimentSpec(
        mode=mode,
        state_path=args.state,
        random=args.random,
        frqi_path=args.frqi,
        k=getattr(args, "k", None),
        all_k=getattr(args, "all_k", False),
        iterations=getattr(args, "iters", None),
        target_error=getattr(args, "error", None),
        init=init,
        beta0=beta0,
        seed=args.seed,
        shots=getattr(args, "shots", None),
        fmt=args.fmt,
    )


def _estimate_mode(args, psi) -> str:
    if args.method == "auto":
        return "estimate-single" if psi.num_qubits == 1 and args.k is None and not args.all_k else "estimate-multi"
    return f"estimate-{args.method}"


def _emit(records, columns, args, out) -> None:
    if args.fmt == "csv":
        write_csv(records, columns, out)
    else:
        write_jsonl(records, out)


def _run(args, out) -> int:
    if args.command == "verify":
        results = run_verify(args.suite)
        records = [
            {"schema_version": 1, "kind": "suite", "name": r.name, "passed": r.passed, "seconds": r.seconds,
             "details": dumps(r.details) if args.fmt == "csv" else r.details}
            for r in results
        ]
        _emit(records, ("schema_version", "kind", "name", "passed", "seconds", "details"), args, out)
        failed = [r.name for r in results if not r.passed]
        print(f"{len(results) - len(failed)}/{len(results)} suites passed" + (f"; failed: {failed}" if failed else ""),
              file=sys.stderr)
        return EXIT_VERIFY if failed else EXIT_OK

    if args.command == "estimate":
        spec = _spec(args, "estimate-multi")
        psi = spec.load()
        spec.mode = _estimate_mode(args, psi)
        _emit(experiments.run_estimate(spec, psi), experiments.ESTIMATE_COLUMNS, args, out)
    elif args.command == "sample":
        _emit(experiments.run_sample(_spec(args, "sample")), experiments.SAMPLE_COLUMNS, args, out)
    elif args.command == "compare":
        report = experiments.run_compare(_spec(args, "compare"))
        if args.fmt == "csv":
            write_csv(report.rows(), experiments.COMPARE_COLUMNS, out)
        else:
            write_jsonl(report.body(), out)
        if args.timing:
            with open(args.timing, "w") as fh:
                write_jsonl([report.timing()], fh)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with contextlib.ExitStack() as stack:
            out = stack.enter_context(open(args.out, "w")) if args.out else sys.stdout
            return _run(args, out)
    except (ValueError, OSError) as exc:
        print(f"ampbisect: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
