"""Command-line surface.

Subcommands: primes, decompose, ensemble, theorem, weil, roots.
Polynomials are given as ascending comma-separated coefficients
("0,2,0,1" is x^3 + 2x).  Defaults for --seed/--threads/--samples can be
overridden through POLYLCM_SEED / POLYLCM_THREADS / POLYLCM_SAMPLES.

Exit codes: 0 success, 2 usage error, 3 identity violation,
4 irreducibility required, 5 empty ensemble, 6 internal bound violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import decomp, ensemble, modroots, ntkernel
from .errors import (
    EmptyEnsembleError,
    InternalConsistencyError,
    IrreducibilityRequiredError,
    WindowViolationError,
)
from .polyring import IntPoly

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IDENTITY = 3
EXIT_IRREDUCIBILITY = 4
EXIT_EMPTY_ENSEMBLE = 5
EXIT_BOUND_VIOLATION = 6


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(f"POLYLCM_{name}")
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        return fallback


def _poly_arg(text: str) -> IntPoly:
    try:
        return IntPoly.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _write_out(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polylcm",
        description="Exact lcm of shifted polynomial sequences and its decomposition",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("primes", help="sieve primes up to a limit")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--show", action="store_true", help="print the table itself")

    p = sub.add_parser("decompose", help="full decomposition report for one shift")
    p.add_argument("--f0", type=_poly_arg, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--B", type=int, default=None, help="small-prime threshold (default N)")
    p.add_argument("--allow-reducible", action="store_true")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.add_argument("--seed", type=int, default=_env_int("SEED", modroots.DEFAULT_SEED))

    p = sub.add_parser("ensemble", help="average a statistic over irreducible shifts")
    p.add_argument("--f0", type=_poly_arg, required=True)
    p.add_argument("--T", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--stat", required=True, choices=ensemble.STATISTICS)
    p.add_argument("--samples", type=int, default=_env_int("SAMPLES", ensemble.DEFAULT_N_SAMPLES))
    p.add_argument("--seed", type=int, default=_env_int("SEED", modroots.DEFAULT_SEED))
    p.add_argument(
        "--sampling", choices=("auto", "exhaustive", "random"), default="auto"
    )
    p.add_argument("--threads", type=int, default=_env_int("THREADS", os.cpu_count() or 1))
    p.add_argument("--csv-out", default=None, help="write per-shift values as CSV")
    p.add_argument("--out", default=None)

    p = sub.add_parser("theorem", help="desk-scale growth check over sampled shifts")
    p.add_argument("--f0", type=_poly_arg, required=True)
    p.add_argument("--T", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--samples", type=int, default=_env_int("SAMPLES", ensemble.DEFAULT_N_SAMPLES))
    p.add_argument("--seed", type=int, default=_env_int("SEED", modroots.DEFAULT_SEED))
    p.add_argument("--epsilon", type=float, default=0.5)
    p.add_argument("--override-window", action="store_true")
    p.add_argument("--threads", type=int, default=_env_int("THREADS", os.cpu_count() or 1))
    p.add_argument("--out", default=None)

    p = sub.add_parser("weil", help="complete exponential sums and the Weil bound")
    p.add_argument("--f0", type=_poly_arg, required=True)
    p.add_argument("--p", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--b", type=int, default=None)
    group.add_argument("--all-b", action="store_true")
    p.add_argument("--strict", action="store_true", help="warn when p <= degree")

    p = sub.add_parser("roots", help="roots of f0 - a modulo p (or p^k)")
    p.add_argument("--f0", type=_poly_arg, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--seed", type=int, default=_env_int("SEED", modroots.DEFAULT_SEED))

    return parser


def _cmd_primes(args) -> int:
    if args.limit < 2:
        print("error: --limit must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    table = ntkernel.sieve_primes(args.limit)
    print(len(table))
    if args.show:
        print(",".join(str(p) for p in table))
    return EXIT_OK


def _cmd_decompose(args) -> int:
    try:
        report = decomp.decomposition_report(
            args.f0, args.a, args.N, allow_reducible=args.allow_reducible,
            B=args.B, seed=args.seed,
        )
    except IrreducibilityRequiredError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IRREDUCIBILITY
    except InternalConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IDENTITY
    if args.format == "json":
        _write_out(report.to_json(), args.out)
    else:
        _write_out(decomp.CSV_HEADER + "\n" + report.csv_row(), args.out)
    return EXIT_OK if report.identity_ok() else EXIT_IDENTITY


def _cmd_ensemble(args) -> int:
    try:
        stats, pairs = ensemble.ensemble_average(
            args.f0,
            args.T,
            args.N,
            args.stat,
            sampling=args.sampling,
            seed=args.seed,
            n_samples=args.samples,
            threads=max(1, args.threads),
            return_values=True,
        )
    except EmptyEnsembleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY_ENSEMBLE
    _write_out(stats.to_json(), args.out)
    if args.csv_out:
        with open(args.csv_out, "w", encoding="utf-8") as fh:
            fh.write(f"a,{args.stat}\n")
            for a, v in pairs:
                fh.write(f"{a},{v!r}\n")
    return EXIT_OK


def _cmd_theorem(args) -> int:
    try:
        report = ensemble.theorem_check(
            args.f0,
            args.T,
            args.N,
            n_samples=args.samples,
            seed=args.seed,
            epsilon=args.epsilon,
            override_window=args.override_window,
            threads=max(1, args.threads),
        )
    except WindowViolationError as exc:
        print(f"error: {exc} (use --override-window to force)", file=sys.stderr)
        return EXIT_USAGE
    except EmptyEnsembleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY_ENSEMBLE
    if not report.window_holds:
        print("warning: outside the admissible (T, N) window", file=sys.stderr)
    _write_out(report.to_json(), args.out)
    return EXIT_OK


def _cmd_weil(args) -> int:
    f0, p = args.f0, args.p
    d = f0.degree
    if args.strict and p <= d:
        print(f"warning: p = {p} <= degree {d}; the (d-1)sqrt(p) bound is not asserted",
              file=sys.stderr)
    bs = range(1, p) if args.all_b else [args.b]
    bound = modroots.weil_bound(d, p)
    violation = False
    for b in bs:
        s = modroots.weil_sum(f0, b, p)
        mag = abs(s)
        margin = bound - mag
        print(f"b={b} |S|={mag:.5f} bound={bound:.5f} margin={margin:.5f}")
        if p > d and 1 <= b < p and margin < 0:
            violation = True
    if violation:
        print("error: Weil bound violated (internal bug)", file=sys.stderr)
        return EXIT_BOUND_VIOLATION
    return EXIT_OK


def _cmd_roots(args) -> int:
    from .polyring import ShiftedPoly

    f = ShiftedPoly(args.f0, args.a)
    rs = modroots.roots_mod_pk(f, args.p, args.k, args.seed)
    print(json.dumps({
        "p": rs.p, "k": rs.k, "modulus": rs.modulus,
        "count": rs.count, "roots": list(rs.roots),
    }, sort_keys=True))
    return EXIT_OK


_DISPATCH = {
    "primes": _cmd_primes,
    "decompose": _cmd_decompose,
    "ensemble": _cmd_ensemble,
    "theorem": _cmd_theorem,
    "weil": _cmd_weil,
    "roots": _cmd_roots,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
