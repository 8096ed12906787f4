"""Command-line front end: ``qverify --all --order 50 --report json``."""
from __future__ import annotations

import argparse
import csv
import json
import sys

from . import catalog, dsl
from .errors import QVerifyError


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qverify", description="Verify q-series identities to a truncation order.")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--all", action="store_true", help="verify every built-in identity")
    what.add_argument("--identity", action="append", metavar="ID", help="verify one built-in identity (repeatable)")
    what.add_argument("--file", metavar="PATH", help="verify the statements in an identity file")
    what.add_argument("--list", action="store_true", help="print built-in ids with default orders")
    what.add_argument("--dump", metavar="EXPR", help="print the series of an expression")
    p.add_argument("--order", type=int, help="truncation order (default: per identity)")
    p.add_argument("--report", choices=("table", "json", "tsv"), default="table")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    return p


def _table(reports, out):
    width = max([len(r.id) for r in reports] + [2])
    out.write(f"{'id':<{width}}  order  result   ms\n")
    for r in reports:
        status = "pass" if r.passed else "FAIL"
        out.write(f"{r.id:<{width}}  {r.order_checked:>5}  {status:<6} {int(r.wall_time * 1000):>4}\n")
        if r.first_mismatch is not None:
            e, a, b = r.first_mismatch
            out.write(f"    first mismatch at q^{e}: lhs {a}, rhs {b}\n")
        if r.error:
            out.write(f"    {r.error}\n")
    failed = sum(not r.passed for r in reports)
    out.write(f"{len(reports) - failed}/{len(reports)} passed\n")


def _tsv(reports, out):
    w = csv.writer(out, delimiter="\t", lineterminator="\n")
    w.writerow(["id", "order", "pass", "exp", "lhs", "rhs", "ms"])
    for r in reports:
        d = r.to_json()
        mm = d["mismatch"] or {"exp": "", "lhs": "", "rhs": ""}
        w.writerow([d["id"], d["order"], str(d["pass"]).lower(), mm["exp"], mm["lhs"], mm["rhs"], d["ms"]])


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    out = sys.stdout
    if args.order is not None and args.order < 1:
        _parser().error("--order must be >= 1")

    if args.list:
        for s in catalog.builtin_catalog():
            out.write(f"{s.id} {s.default_order}\n")
        return 0

    if args.dump is not None:
        try:
            node = dsl.parse_expr(args.dump)
            order = args.order or 10
            out.write(str(dsl.evaluate(node, order).truncate(order + 1)) + "\n")
        except QVerifyError as exc:
            sys.stderr.write(f"error: {exc}\n")
            return 1
        return 0

    if args.file:
        try:
            with open(args.file, encoding="utf-8") as fh:
                statements = dsl.parse_identity_file(fh.read())
        except (OSError, QVerifyError) as exc:
            sys.stderr.write(f"error: {exc}\n")
            return 1
        specs = [catalog.spec_from_statement(st) for st in statements]
    elif args.identity:
        known = catalog.catalog_by_id()
        missing = [i for i in args.identity if i not in known]
        if missing:
            sys.stderr.write(f"error: unknown identity {', '.join(missing)} (see --list)\n")
            return 2
        specs = [known[i] for i in args.identity]
    else:
        specs = catalog.builtin_catalog()

    reports = catalog.verify_all(args.order, parallel=args.jobs > 1, specs=specs, jobs=args.jobs)
    if args.report == "json":
        json.dump([r.to_json() for r in reports], out, indent=1)
        out.write("\n")
    elif args.report == "tsv":
        _tsv(reports, out)
    else:
        _table(reports, out)
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
