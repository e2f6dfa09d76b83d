"""Command-line interface: ``coeff``, ``tableaux``, ``table`` and ``verify``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import checks
from .ktableaux import enumerate_tableaux, reading_word, render
from .lr import CoeffKey, CoeffRecord, coeff_oracle, coeff_tableau, compute_record, iter_keys, normalize, parallel_map
from .partitions import SkewShape, is_lattice, parse_partition

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
CACHE_ENV = "LRQ_CACHE"


class UsageError(Exception):
    pass


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _add_partitions(parser: argparse.ArgumentParser) -> None:
    for flag, dest in (("--kappa", "kappa"), ("--lambda", "lam"), ("--mu", "mu"), ("--nu", "nu")):
        parser.add_argument(flag, dest=dest, type=_partition_arg, default=(), metavar="PARTS",
                            help="comma-separated parts; omitted means empty")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lrq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeff", help="one coefficient polynomial")
    p.add_argument("--k", type=_positive_int, required=True)
    _add_partitions(p)
    p.add_argument("--method", choices=("tableau", "oracle", "both"), default="tableau")
    p.add_argument("--normalized", action="store_true", help="print the balanced normalization")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("tableaux", help="list k-tableaux of shape lambda/mu with content nu/kappa")
    p.add_argument("--k", type=_positive_int, required=True)
    _add_partitions(p)
    p.add_argument("--lattice", action="store_true", help="keep only lattice-word tableaux")

    p = sub.add_parser("table", help="write all nonzero coefficients as JSON lines")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--max-size", type=_nonneg_int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--cache", default=os.environ.get(CACHE_ENV))
    p.add_argument("--method", choices=("tableau", "oracle", "both"), default="tableau")
    p.add_argument("--threads", type=_positive_int, default=os.cpu_count() or 1)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--max-size", type=_nonneg_int, default=4)
    p.add_argument("--k-max", type=_positive_int, default=2)
    p.add_argument("--checks", default=",".join(checks.DEFAULT_CHECKS),
                   help=f"comma-separated subset of {','.join(checks.CHECKS)}")
    p.add_argument("--threads", type=_positive_int, default=os.cpu_count() or 1)
    return parser


def cmd_coeff(args, out) -> int:
    key = CoeffKey.of(args.k, args.kappa, args.lam, args.mu, args.nu)
    if args.method == "both":
        a, b = coeff_tableau(key), coeff_oracle(key)
        if a != b:
            if args.json:
                print(json.dumps({"tableau": a.to_json(), "oracle": b.to_json(), "match": False}), file=out)
            else:
                print(f"tableau: {a}\noracle: {b}\nMISMATCH", file=out)
            return EXIT_MISMATCH
        record = CoeffRecord(key, a, normalize(a, key), "both")
        if not args.json:
            shown = record.big_c if args.normalized else record.little_c
            print(f"tableau: {shown}\noracle: {shown}\nmatch", file=out)
            return EXIT_OK
    else:
        record = compute_record(key, args.method)
    if args.json:
        print(json.dumps(record.to_json()), file=out)
    else:
        print(record.big_c if args.normalized else record.little_c, file=out)
    return EXIT_OK


def cmd_tableaux(args, out) -> int:
    try:
        shape = SkewShape.of(args.lam, args.mu)
        found = enumerate_tableaux(shape, args.nu, args.kappa, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lattice_count = 0
    shown = 0
    for T in found:
        word = reading_word(T, args.kappa)
        ok = is_lattice(word)
        lattice_count += ok
        if args.lattice and not ok:
            continue
        shown += 1
        flag = "" if ok else "  not lattice"
        print(f"# {shown}  c(T) = t^{T.degree()}  word = {''.join(map(str, word))}{flag}", file=out)
        body = render(T)
        if body:
            print(body, file=out)
    print(f"{shown} tableaux ({len(found)} semistandard, {lattice_count} lattice)", file=out)
    return EXIT_OK


def load_cache(path: Path) -> dict[CoeffKey, CoeffRecord]:
    """Read a JSON-lines cache; later lines win, inconsistent records are dropped."""
    records: dict[CoeffKey, CoeffRecord] = {}
    if not path.exists():
        return records
    with path.open() as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                record = CoeffRecord.from_json(json.loads(line))
            except (ValueError, KeyError, TypeError) as exc:
                print(f"warning: {path}:{lineno}: skipping unreadable record ({exc})", file=sys.stderr)
                continue
            if not record.is_consistent():
                print(f"warning: {path}:{lineno}: skipping inconsistent record", file=sys.stderr)
                continue
            records[record.key] = record
    return records


def _compute_tableau(key: CoeffKey) -> CoeffRecord:
    return compute_record(key, "tableau", cache=None)


def cmd_table(args, out) -> int:
    cache_path = Path(args.cache) if args.cache else None
    try:
        cached = load_cache(cache_path) if cache_path else {}
    except OSError as exc:
        print(f"error: cannot read cache {cache_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    keys = list(iter_keys(args.max_size, args.k))
    missing = [key for key in keys if key not in cached]
    if args.method == "tableau":
        fresh = parallel_map(_compute_tableau, missing, args.threads)
    else:
        fresh = [compute_record(key, args.method, cache=None) for key in missing]
    records = dict(cached)
    records.update((r.key, r) for r in fresh)
    out_path = Path(args.out)
    try:
        if cache_path and fresh:
            with cache_path.open("a") as fh:
                for r in fresh:
                    fh.write(json.dumps(r.to_json()) + "\n")
        written = 0
        with out_path.open("w") as fh:
            for key in keys:
                r = records[key]
                if r.little_c:
                    fh.write(json.dumps(r.to_json()) + "\n")
                    written += 1
    except OSError as exc:
        print(f"error: {exc.filename or out_path}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {written} records to {out_path} ({len(fresh)} computed, {len(keys) - len(fresh)} from cache)",
          file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    names = [x.strip() for x in args.checks.split(",") if x.strip()]
    unknown = [x for x in names if x not in checks.CHECKS]
    if unknown:
        raise UsageError(f"unknown checks {unknown}; choose from {','.join(checks.CHECKS)}")
    status = EXIT_OK
    for report, seconds in checks.run(names, args.max_size, args.k_max, args.threads):
        verdict = "PASS" if report.ok else "FAIL"
        print(f"{verdict} {report.name}: {report.checked} checked, {len(report.failures)} failures, {seconds:.2f}s",
              file=out)
        if not report.ok:
            print(f"  counterexample: {report.failures[0]}", file=out)
            status = EXIT_MISMATCH
    return status


COMMANDS = {"coeff": cmd_coeff, "tableaux": cmd_tableaux, "table": cmd_table, "verify": cmd_verify}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
