"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
3 inadmissible or non-confluent presentation.
"""

import argparse
import json
import sys
from fractions import Fraction
from math import floor
from typing import List, Optional

from . import catalog
from .chern import BundleError, chernrank, saturates_degree
from .cuplen import (chern_monomial_length, cup_bound_hypothesis, cup_length_bound,
                     even_cup_length)
from .dsl import DslError, export_entry, parse
from .gring import NonAdmissiblePresentation, NonConfluent, UnknownGenerator, r_x
from .rules import InconsistentBounds, PreconditionNotMet, rank_report

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_PRESENTATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _fmt(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return ",".join(_fmt(v) for v in value)
    return str(value)


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple):
        return list(value)
    return value


class Output:
    def __init__(self, stream, as_json: bool):
        self.stream = stream
        self.as_json = as_json
        self.fields = {}
        self.table: List[str] = []

    def put(self, key, value):
        self.fields[key] = value

    def row(self, text):
        self.table.append(text)

    def flush(self):
        if self.as_json:
            obj = {k: _jsonable(v) for k, v in self.fields.items()}
            self.stream.write(json.dumps(obj, ensure_ascii=False, sort_keys=False) + "\n")
            return
        for k, v in self.fields.items():
            self.stream.write(f"{k}={_fmt(v)}\n")
        if self.table:
            self.stream.write("\n" + "\n".join(self.table) + "\n")


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    doc = parse(text)
    doc.ring()
    return doc


def _get_bundle(doc, label):
    try:
        return doc.get_bundle(label)
    except KeyError:
        raise UsageError(f"no bundle labelled {label!r}") from None


def cmd_chernrank(args, out):
    doc = _load(args.file)
    x = _get_bundle(doc, args.bundle)
    ring = doc.ring()
    out.put("space", doc.name)
    out.put("bundle", x.label)
    out.put("chernrank", chernrank(x, doc.dim))
    out.put("r_x", r_x(ring, doc.dim))
    out.row(f"{'degree':>6}  {'group':<16} saturated")
    for d in range(2, doc.dim + 1, 2):
        out.row(f"{d:>6}  {str(ring.group(d)):<16} {_fmt(saturates_degree(x, d))}")
    return EXIT_OK


def cmd_cuplength(args, out):
    doc = _load(args.file)
    rep = even_cup_length(doc.ring(), doc.dim)
    out.put("space", doc.name)
    out.put("cup_length", rep.length)
    out.put("witness", [str(w) for w in rep.witness])
    return EXIT_OK


def cmd_uchrank(args, out):
    doc = _load(args.file)
    rep = rank_report(doc.bundle_objects(), doc.ring(), doc.meta())
    out.put("space", doc.name)
    out.put("lower", rep.lower)
    out.put("upper", rep.upper)
    out.put("determined", rep.determined)
    out.put("lower_witness", rep.lower_witness)
    out.put("rules", [str(h) for h in rep.rule_trace])
    out.row(f"uchrank in {rep.interval()}")
    for h in rep.rule_trace:
        out.row(f"  {h}" + (f"  -- {h.note}" if h.note else ""))
    return EXIT_OK


def cmd_monolen(args, out):
    doc = _load(args.file)
    x = _get_bundle(doc, args.bundle)
    out.put("space", doc.name)
    out.put("bundle", x.label)
    out.put("monomial_length", chern_monomial_length(x, doc.dim))
    return EXIT_OK


def cmd_bound(args, out):
    if args.which == "thm12":
        if args.d is None or args.k is None or args.rx is None:
            raise UsageError("bound thm12 needs --d, --k and --rx")
        try:
            b = cup_length_bound(args.d, args.k, args.rx)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out.put("bound", b)
        out.put("bound_floor", floor(b))
        return EXIT_OK
    if args.file is None or args.bundle is None or args.k is None:
        raise UsageError("bound thm12-check needs FILE, --bundle and --k")
    doc = _load(args.file)
    x = _get_bundle(doc, args.bundle)
    d = args.d if args.d is not None else doc.meta().complex_dim
    if d is None:
        if doc.dim % 2:
            raise UsageError("odd-dimensional space has no complex dimension; pass --d")
        d = doc.dim // 2
    hyp = cup_bound_hypothesis(x, args.k, d)
    cup = even_cup_length(doc.ring(), doc.dim).length
    out.put("space", doc.name)
    out.put("bundle", x.label)
    out.put("hypothesis", hyp)
    out.put("cup_length", cup)
    if hyp:
        b = cup_length_bound(d, args.k, r_x(doc.ring(), doc.dim))
        out.put("bound", b)
        out.put("holds", cup <= b)
        return EXIT_OK if cup <= b else EXIT_FAIL
    return EXIT_OK


def cmd_catalog(args, out):
    if args.action == "list":
        params = catalog.default_parameters()
        names = []
        for family, plist in params.items():
            for p in plist:
                e = catalog.space(family, *p)
                names.append(e.name)
                out.row(f"{e.name:<14} dim={e.dim:<3} expected={e.expected_uchrank:<3} {e.citation}")
        out.put("entries", len(names))
        return EXIT_OK
    if args.action in ("show", "export"):
        if not args.name:
            raise UsageError(f"catalog {args.action} needs a NAME")
        entry = catalog.lookup(args.name)
        if args.action == "export":
            out.stream.write(export_entry(entry))
            out.as_json = False
            return EXIT_OK
        v = catalog.verify(entry)
        for k, val in v.as_dict().items():
            if k != "checks":
                out.put(k, val)
        out.row(entry.ring.describe())
        for x in entry.candidates:
            out.row(f"candidate {x}  [{x.justification}]")
        for c in v.checks:
            out.row(f"check {c.name}: {'ok' if c.passed else 'FAILED'} ({c.detail})")
        return EXIT_OK if v.passed else EXIT_FAIL
    if args.action == "verify":
        overrides = {}
        for item in args.override or []:
            name, sep, value = item.rpartition("=")
            if not sep or not value.lstrip("-").isdigit():
                raise UsageError(f"bad override {item!r}; expected NAME=VALUE")
            overrides[name] = int(value)
        families = None
        if args.family:
            defaults = catalog.default_parameters()
            unknown = [f for f in args.family if f not in defaults]
            if unknown:
                raise UsageError(f"unknown family {unknown}")
            families = {f: defaults[f] for f in args.family}
        summary = catalog.verify_all(families, args.max, overrides, jobs=args.jobs)
        for v in summary.verdicts:
            out.row(f"{v.name:<14} {v.status:<15} expected={v.expected:<3} "
                    f"interval={v.report.interval():<8} {v.citation}")
        out.put("entries", len(summary.verdicts))
        out.put("passes", summary.passes)
        out.put("determined", summary.count(catalog.DETERMINED))
        out.put("paper_asserted", summary.count(catalog.PAPER_ASSERTED))
        out.put("failures", summary.failures)
        if summary.failures:
            out.put("failed", [v.name for v in summary.verdicts if not v.passed])
        return EXIT_FAIL if summary.failures else EXIT_OK
    raise UsageError(f"unknown catalog action {args.action!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chernlab", description="Chern rank workbench")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit one JSON object")

    sp = sub.add_parser("chernrank", help="chern rank of a bundle")
    sp.add_argument("file")
    sp.add_argument("--bundle", required=True)
    common(sp)
    sp.set_defaults(func=cmd_chernrank)

    sp = sub.add_parser("cuplength", help="even cup length")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_cuplength)

    sp = sub.add_parser("uchrank", help="interval for the upper chern rank")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_uchrank)

    sp = sub.add_parser("monolen", help="longest nonzero Chern monomial")
    sp.add_argument("file")
    sp.add_argument("--bundle", required=True)
    common(sp)
    sp.set_defaults(func=cmd_monolen)

    sp = sub.add_parser("bound", help="cup length bound for complex manifolds")
    sp.add_argument("which", choices=["thm12", "thm12-check"])
    sp.add_argument("file", nargs="?")
    sp.add_argument("--d", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--rx", type=int)
    sp.add_argument("--bundle")
    common(sp)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("catalog", help="catalog of known spaces")
    sp.add_argument("action", choices=["list", "show", "verify", "export"])
    sp.add_argument("name", nargs="?")
    sp.add_argument("--max", type=int, help="cap every family parameter")
    sp.add_argument("--family", action="append", help="restrict to a family (repeatable)")
    sp.add_argument("--override", action="append", metavar="NAME=VALUE",
                    help="replace an expected value (harness self-test)")
    sp.add_argument("--jobs", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_catalog)
    return p


def run(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(stdout, args.json)
    try:
        code = args.func(args, out)
    except DslError as exc:
        stderr.write(f"{getattr(args, 'file', '')}:{exc.line}:{exc.col}: {exc.message}\n")
        return EXIT_PARSE
    except (NonAdmissiblePresentation, NonConfluent) as exc:
        witness = getattr(exc, "witness", None)
        where = f" (witness {witness})" if witness else ""
        stderr.write(f"{getattr(args, 'file', '') or args.command}: {exc}{where}\n")
        return EXIT_PRESENTATION
    except (UsageError, catalog.UnsupportedParams, UnknownGenerator, BundleError,
            PreconditionNotMet) as exc:
        stderr.write(f"{args.command}: {exc}\n")
        return EXIT_PARSE
    except InconsistentBounds as exc:
        stderr.write(f"{args.command}: {exc}\n")
        return EXIT_FAIL
    out.flush()
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
