"""Command-line interface.

Exit codes: 0 success, 1 verification failure (with witness), 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from posetres.enumeration import Premise, SizeBoundExceeded, sweep
from posetres.fixtures import FIXTURES, fixture_text, load_fixture, verify_fixture
from posetres.poset import PosetError
from posetres.properties import full_report
from posetres.residuation import (
    NoPseudocomplement,
    PremisesViolated,
    Variant,
    build_tables,
    premises,
    verify_left_adjointness,
)
from posetres.textio import PosetDocument, parse_poset_file, render_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def read_document(arg: str) -> PosetDocument:
    """A poset file path, or a built-in fixture given as ``fig3`` or ``fixtures/fig3``."""
    path = Path(arg)
    if path.is_file():
        return parse_poset_file(path.read_text(encoding="utf-8"))
    fid = arg.rstrip("/").rsplit("/", 1)[-1]
    if fid in FIXTURES:
        return parse_poset_file(fixture_text(fid))
    raise UsageError(f"no such file or fixture: {arg}")


def _load(arg: str):
    doc = read_document(arg)
    p = doc.to_poset()
    return doc, p, doc.unary_op(p)


def cmd_check(args, out) -> int:
    doc, p, u = _load(args.file)
    reports = full_report(p, u)
    if args.json:
        payload = {
            "poset": doc.name,
            "elements": list(p.names),
            "bounded": p.bounded,
            "lattice": p.is_lattice(),
            "reports": [r.to_dict() for r in reports],
        }
        out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
        return EXIT_OK
    out.write(f"poset {doc.name}: {p.n} elements, "
              f"{'bounded' if p.bounded else 'not bounded'}, "
              f"{'a lattice' if p.is_lattice() else 'not a lattice'}\n")
    for r in reports:
        out.write(r.describe() + "\n")
    return EXIT_OK


def cmd_tables(args, out) -> int:
    _, p, u = _load(args.file)
    try:
        t_odot, t_arrow = build_tables(p, u, Variant(args.variant), not args.no_enforce)
    except PremisesViolated as exc:
        out.write(exc.report.describe() + "\n")
        return EXIT_FAIL
    except NoPseudocomplement as exc:
        out.write(f"{exc}\n")
        return EXIT_FAIL
    out.write(render_table(t_odot, args.format))
    out.write("\n")
    out.write(render_table(t_arrow, args.format))
    return EXIT_OK


def cmd_adjoint(args, out) -> int:
    _, p, u = _load(args.file)
    v = Variant(args.variant)
    try:
        tables = build_tables(p, u, v, enforce_premises=False)
    except NoPseudocomplement as exc:
        out.write(f"{exc}\n")
        return EXIT_FAIL
    if not premises(p, u, v).passed:
        out.write(f"note: premises of variant {v.value} do not hold\n")
    verdict = verify_left_adjointness(p, *tables)
    out.write(verdict.describe() + "\n")
    return EXIT_OK if verdict.holds else EXIT_FAIL


def cmd_search(args, out) -> int:
    report = sweep(Premise(args.premise), args.max_size, up_to_iso=not args.labeled)
    out.write(report.summary() + "\n")
    for up, image, detail in report.adjointness_failures:
        out.write(f"  adjointness: up={list(up)} unary={image} at {detail}\n")
    for up, image, detail in report.identity_failures:
        out.write(f"  identity: up={list(up)} unary={image}: {detail}\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def _expected_verdicts(entry) -> dict[str, bool]:
    p = entry.poset
    u = entry.unary(p)
    reports = {r.title: r for r in full_report(p, u)}
    actual = {
        "bounded": p.bounded,
        "lattice": p.is_lattice(),
        "distributive": reports["distributive"].passed,
        "modular": reports["modular"].passed,
        "strongly_modular": reports["strongly modular"].passed,
        "rp": reports["relatively pseudocomplemented"].passed,
    }
    if u is not None:
        unary = reports["unary operation"]
        actual["involution"] = unary["involution x''=x"].passed
        actual["antitone"] = unary["antitone x<=y => y'<=x'"].passed
        if p.bounded:
            actual["complemented"] = (unary["complemented L(x,x')=0"].passed
                                      and unary["complemented U(x,x')=1"].passed)
            actual["boolean"] = reports["Boolean"].passed
            actual["th1"] = reports["premises of the general theorem"].passed
            actual["th3"] = reports["premises of the piecewise theorem"].passed
    return actual


def cmd_fixtures(args, out) -> int:
    status = EXIT_OK
    for fid in FIXTURES:
        entry = load_fixture(fid)
        p = entry.poset
        out.write(f"{fid}: {p.n} elements, variant {entry.variant.value}, "
                  f"printed tables: {', '.join(entry.golden) or 'none'}\n")
        if not args.verify:
            continue
        actual = _expected_verdicts(entry)
        for key, want in entry.expected.items():
            if actual.get(key) != want:
                status = EXIT_FAIL
                out.write(f"  verdict {key}: expected {want}, got {actual.get(key)}\n")
        tables = entry.tables()
        adj = verify_left_adjointness(p, *tables)
        if not adj.holds:
            status = EXIT_FAIL
            out.write(f"  {adj.describe()}\n")
        for kind, diffs in verify_fixture(entry, tables).items():
            if not diffs:
                out.write(f"  {kind}: matches the printed table\n")
                continue
            status = EXIT_FAIL
            out.write(f"  {kind}: {len(diffs)} cells differ from the printed table\n")
            for row, col, printed, computed in diffs:
                note = _misprint_note(entry, tables, kind, row, col, printed)
                out.write(f"    {row} {col}: printed {printed}, computed {computed}{note}\n")
    return status


def _misprint_note(entry, tables, kind, row, col, printed) -> str:
    """Whether substituting the printed cell into the computed tables breaks adjointness."""
    p = entry.poset
    try:
        mask = p.mask(*printed.strip("{}").split(","))
    except PosetError:
        return ""
    t_odot, t_arrow = tables
    if kind == "odot":
        t_odot = t_odot.replace(p.index(row), p.index(col), mask)
    else:
        t_arrow = t_arrow.replace(p.index(row), p.index(col), mask)
    verdict = verify_left_adjointness(p, t_odot, t_arrow)
    if verdict.holds:
        return ""
    a, b, c, _, _ = verdict.counterexample
    return f" (printed value breaks adjointness at a={a}, b={b}, c={c})"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posetres", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    variants = [v.value for v in Variant]

    p = sub.add_parser("check", help="all property and premise reports")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("tables", help="render the ⊙ and → tables")
    p.add_argument("file")
    p.add_argument("--variant", required=True, choices=variants)
    p.add_argument("--format", default="tsv", choices=["tsv", "markdown"])
    p.add_argument("--no-enforce", action="store_true", help="skip the premise check")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("adjoint", help="exhaustive left adjointness check")
    p.add_argument("file")
    p.add_argument("--variant", required=True, choices=variants)
    p.set_defaults(func=cmd_adjoint)

    p = sub.add_parser("search", help="sweep all small models satisfying a premise bundle")
    p.add_argument("--premise", required=True, choices=[x.value for x in Premise])
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--labeled", action="store_true", help="do not reduce up to isomorphism")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("fixtures", help="list the built-in examples")
    p.add_argument("--verify", action="store_true",
                   help="regenerate every printed table and diff it")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (PosetError, UsageError, SizeBoundExceeded, ValueError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
