"""Command-line front end.

Subcommands: gamma, zero-iterate, tables, bench.  Every command is
deterministic given its flags and input files; --threads only changes
wall time, never results.  Exit codes: 0 ok, 2 catalog miss, 3 domain or
cap error, 4 diverged iteration, 5 singular guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import summation
from .bench import CSV_HEADER as BENCH_HEADER
from .bench import bench_offdiag
from .errors import CatalogError, DomainError, SingularGuardError, ZetaGammaError
from .fixedpoint import FixedPointMap, FixedPointStatus, iterate_fixed_point
from .series import gamma_type1, gamma_type2
from .tables import TABLE_IDS, TableSpec, build_table
from .zeros import builtin_catalog, get_zero, load_catalog

EXIT_OK = 0
EXIT_CATALOG = 2
EXIT_DOMAIN = 3
EXIT_DIVERGED = 4
EXIT_SINGULAR = 5

#: Above this k, per-call sums scan enough terms to take whole seconds.
RUNTIME_WARN_K = 5_000_000


def _fmt(value) -> str:
    # 15 significant digits everywhere; empty cell for missing values.
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.15g}"
    return str(value)


def _resolve_catalog(args):
    if args.zeros_file:
        return load_catalog(args.zeros_file)
    return builtin_catalog()


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {exc}")


def _write_csv(stream, header: Sequence[str], rows) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(cell) for cell in row])


def _cmd_gamma(args) -> int:
    catalog = _resolve_catalog(args)
    zero = get_zero(catalog, args.q)
    fn = gamma_type1 if args.method == "type1" else gamma_type2
    est = fn(zero.t, args.k, q=zero.q)
    if args.json:
        print(json.dumps({"value": est.value, "method": est.method.value,
                          "q": est.q, "t_q": est.t_q, "k": est.k}))
    else:
        print(_fmt(est.value))
        print(f"method={est.method.value} q={est.q} t_q={_fmt(est.t_q)} k={est.k}")
    return EXIT_OK


_STATUS_EXIT = {
    FixedPointStatus.CONVERGED: EXIT_OK,
    FixedPointStatus.MAX_ITERS: EXIT_OK,
    FixedPointStatus.DIVERGED: EXIT_DIVERGED,
    FixedPointStatus.SINGULAR_GUARD: EXIT_SINGULAR,
}


def _cmd_zero_iterate(args) -> int:
    if args.k >= RUNTIME_WARN_K:
        print(f"warning: k={args.k} scans {args.k} terms per iterate; "
              "expect seconds per iteration", file=sys.stderr)
    trace = iterate_fixed_point(FixedPointMap(args.map), args.y0, args.k,
                                args.iters, args.tol)
    if args.json:
        print(json.dumps(trace.to_json_dict()))
    else:
        _write_csv(sys.stdout, ("iteration", "value"), trace.csv_rows())
        print(f"status: {trace.status.value} "
              f"(final_residual={_fmt(trace.final_residual)})", file=sys.stderr)
    return _STATUS_EXIT[trace.status]


def _cmd_tables(args) -> int:
    spec = TableSpec(table_id=args.id, k=args.k,
                     zero_indices=tuple(args.q) if args.q else None)
    header, rows = build_table(spec, catalog=_resolve_catalog(args))
    if args.json:
        payload = {"table_id": args.id,
                   "rows": [{name: row[name] for name in header} for row in rows]}
        text = json.dumps(payload)
        if args.out:
            _write_file(args.out, text + "\n")
        else:
            print(text)
        return EXIT_OK
    if args.out:
        buf = io.StringIO()
        _write_csv(buf, header, ([row[name] for name in header] for row in rows))
        _write_file(args.out, buf.getvalue())
    else:
        _write_csv(sys.stdout, header, ([row[name] for name in header] for row in rows))
    return EXIT_OK


def _write_file(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ZetaGammaError(f"cannot write {path}: {exc}") from exc


def _cmd_bench(args) -> int:
    catalog = _resolve_catalog(args)
    zero = get_zero(catalog, args.q)
    reports = bench_offdiag(zero.t, args.k)
    if args.json:
        print(json.dumps({"reports": [dict(zip(BENCH_HEADER, r.csv_row()))
                                      for r in reports]}))
    else:
        _write_csv(sys.stdout, BENCH_HEADER, (r.csv_row() for r in reports))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--zeros-file", metavar="PATH", default=None,
                        help="load zero ordinates from a plain-text file "
                             "instead of the embedded catalog")
    common.add_argument("--json", action="store_true",
                        help="emit a single JSON object instead of text/CSV")
    common.add_argument("--threads", type=int, default=1, metavar="N",
                        help="worker threads for long sums (speed only; "
                             "results are bit-identical)")

    parser = argparse.ArgumentParser(
        prog="zetagamma",
        description="Euler-Mascheroni estimates from individual zeta zeros, "
                    "fixed-point zero recovery, reference-table reproduction, "
                    "and summation benchmarks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", parents=[common],
                       help="estimate gamma from one zero")
    p.add_argument("--method", choices=("type1", "type2"), required=True)
    p.add_argument("--q", type=int, required=True, help="zero index")
    p.add_argument("--k", type=int, required=True, help="truncation length")
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("zero-iterate", parents=[common],
                       help="run a fixed-point recursion from y0")
    p.add_argument("--map", choices=("f", "g"), required=True)
    p.add_argument("--y0", type=float, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--iters", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=_cmd_zero_iterate)

    p = sub.add_parser("tables", parents=[common],
                       help="reproduce a bundled reference table as CSV")
    p.add_argument("--id", choices=TABLE_IDS, required=True)
    p.add_argument("--out", metavar="PATH", default=None,
                   help="output file (default: stdout)")
    p.add_argument("--k", type=int, default=None, help="k override")
    p.add_argument("--q", type=_int_list, default=None,
                   help="comma-separated zero indices override")
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("bench", parents=[common],
                       help="time naive vs factorized off-diagonal sums")
    p.add_argument("--k", type=_int_list, required=True,
                   help="comma-separated truncation lengths")
    p.add_argument("--q", type=int, default=1, help="zero index")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads != 1:
        summation.set_num_workers(args.threads)
    try:
        return args.func(args)
    except CatalogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CATALOG
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except SingularGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except ZetaGammaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
