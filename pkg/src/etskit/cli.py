"""Command-line surface.

Subcommands: ``gen`` (catalog one class), ``classify`` (fill LSS labels of
a catalog file), ``search`` (find trapping sets of a concrete code from
its short cycles), ``verify`` (regenerate catalogs and diff against the
shipped reference tables).

Exit codes: 0 success, 1 mismatch/diff, 2 usage error, 3 input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from etskit import tables
from etskit.errors import AlistParseError, EtsError
from etskit.lss import label_catalog
from etskit.search import find_etss, format_report_table
from etskit.structgen import (
    Catalog,
    ClassSpec,
    generate_structures,
    read_catalog,
    write_catalog,
)
from etskit.tanner import parse_alist

EXIT_OK = 0
EXIT_DIFF = 1
EXIT_USAGE = 2
EXIT_INPUT = 3

EXTENDED_THRESHOLD = 1000


def _hist_str(hist: dict) -> str:
    inner = ", ".join(f"{k}:{v}" for k, v in hist.items())
    return "{" + inner + "}"


def _class_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dl", type=int, required=True, help="variable-node degree (3..6)")
    p.add_argument("--girth", type=int, required=True, help="Tanner girth (6 or 8)")


def cmd_gen(args) -> int:
    spec = ClassSpec(d_l=args.dl, g=args.girth, a=args.a, b=args.b)
    table = tables.get_table(spec.d_l, spec.g)
    if table and table.in_scope(spec.a, spec.b):
        expected = table.expected_total(spec.a, spec.b)
        if expected > EXTENDED_THRESHOLD and not args.extended:
            print(
                f"class ({spec.a},{spec.b}) has {expected} structures; "
                f"rerun with --extended",
                file=sys.stderr,
            )
            return EXIT_USAGE
    catalog = generate_structures(spec, threads=args.threads)
    if not args.no_lss:
        catalog = label_catalog(catalog, threads=args.threads)
    write_catalog(catalog, args.out)
    if len(catalog) == 0:
        print("total=0 (class infeasible or empty)")
    else:
        print(
            f"total={len(catalog)} absorbing={catalog.absorbing_count} "
            f"lss={_hist_str(catalog.label_histogram())}"
        )
    return EXIT_OK


def cmd_classify(args) -> int:
    catalog = read_catalog(args.catalog)
    if any(e.lss is not None for e in catalog.entries) and not args.force:
        print(
            "catalog already carries labels; use --force to relabel",
            file=sys.stderr,
        )
        return EXIT_USAGE
    labeled = label_catalog(
        Catalog(spec=catalog.spec, entries=catalog.entries), threads=args.threads
    )
    write_catalog(labeled, args.catalog)
    print(_hist_str(labeled.label_histogram()))
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        graph = parse_alist(Path(args.alist).read_text())
    except AlistParseError as exc:
        print(f"error: {args.alist}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report, frontier = find_etss(
        graph,
        k=args.k,
        max_len=args.max_cycle_len,
        code_id=args.code_id or Path(args.alist).stem,
        include_sets=args.sets,
        threads=args.threads,
    )
    Path(args.out).write_text(report.to_json())
    if args.sets_out:
        lines = frontier.export_lines(graph)
        Path(args.sets_out).write_text("\n".join(lines) + ("\n" if lines else ""))
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(format_report_table(report))
    return EXIT_OK


def cmd_verify(args) -> int:
    table = tables.get_table(args.dl, args.girth)
    if table is None:
        print(f"no reference table for d_l={args.dl}, g={args.girth}", file=sys.stderr)
        return EXIT_USAGE
    tables.verify_checksum()
    diffs = 0
    skipped = []
    for a in range(table.a_range[0], min(args.max_a, table.a_range[1]) + 1):
        for b in range(table.b_range[0], table.b_range[1] + 1):
            expected = table.expected_total(a, b)
            if expected > EXTENDED_THRESHOLD and not args.extended:
                skipped.append((a, b))
                continue
            row = table.rows.get((a, b))
            want_ts = dict(row["ts"]) if row else {}
            want_as = dict(row["as"]) if row else {}
            catalog = label_catalog(
                generate_structures(
                    ClassSpec(d_l=args.dl, g=args.girth, a=a, b=b),
                    threads=args.threads,
                ),
                threads=args.threads,
            )
            got_ts = catalog.label_histogram()
            got_as = catalog.label_histogram(absorbing_only=True)
            if got_ts == want_ts and got_as == want_as:
                status = "ok"
            else:
                status = (
                    f"DIFF ts={_hist_str(got_ts)} want {_hist_str(want_ts)} "
                    f"as={_hist_str(got_as)} want {_hist_str(want_as)}"
                )
                diffs += 1
            print(f"({a},{b}): {status}")
    for a, b in skipped:
        print(f"({a},{b}): skipped (needs --extended)")
    print(f"verify d_l={args.dl} g={args.girth}: {diffs} diff(s)")
    return EXIT_DIFF if diffs else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="etskit",
        description="Trapping-set structure catalogs and cycle-based search "
        "for variable-regular LDPC codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate the catalog of one (a,b) class")
    _class_args(p)
    p.add_argument("--a", type=int, required=True, help="trapping-set size")
    p.add_argument("--b", type=int, required=True, help="unsatisfied-check count")
    p.add_argument("--out", required=True, help="catalog file to write")
    p.add_argument("--extended", action="store_true",
                   help="allow classes with more than 1000 structures")
    p.add_argument("--no-lss", action="store_true",
                   help="skip LSS labeling (writes '?' labels)")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("classify", help="fill LSS labels of a catalog file")
    p.add_argument("--catalog", required=True)
    p.add_argument("--force", action="store_true", help="relabel labeled catalogs")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("search", help="search a concrete code for trapping sets")
    p.add_argument("--alist", required=True, help="parity-check matrix in alist form")
    p.add_argument("--k", type=int, required=True, help="largest set size to search")
    p.add_argument("--max-cycle-len", type=int, required=True, dest="max_cycle_len",
                   help="longest cycle length used as seeds")
    p.add_argument("--out", required=True, help="JSON report path")
    p.add_argument("--sets", action="store_true", help="include the sets in the report")
    p.add_argument("--sets-out", help="also write the frontier as TSV lines")
    p.add_argument("--code-id", help="code identifier for the report")
    p.add_argument("--json", action="store_true", help="print JSON instead of a table")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="diff regenerated catalogs against shipped tables")
    _class_args(p)
    p.add_argument("--max-a", type=int, default=9, dest="max_a")
    p.add_argument("--extended", action="store_true",
                   help="include classes with more than 1000 structures")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EtsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
