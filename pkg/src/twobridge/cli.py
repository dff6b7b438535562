"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 I/O or data-file error,
3 verification mismatch.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from .diagram import build_diagram, component_count, gauss_code
from .enumerator import TabulationRow, tabulate, tabulate_range
from .equivalence import LinkClass, canonicalize
from .identify import (
    TableError,
    identify_class,
    ingest_table,
    load_reference_fixture,
    normalize_id,
    shipped_table,
    verify_fixture,
)
from .invariants import CapacityError, identification_key, kauffman_bracket, linking_number, writhe
from .rational import as_form, eval_cf
from .splitting import splitting_number

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_MISMATCH = 0, 1, 2, 3
N_RANGE = (3, 16)
CSV_COLUMNS = ["n", "p", "q", "conway", "id", "sp"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twobridge", description="Tabulate and identify 2-bridge links.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_range(p, default_max=None):
        g = p.add_mutually_exclusive_group(required=default_max is None)
        g.add_argument("--n", type=int, help="a single crossing number")
        g.add_argument("--n-max", type=int, help="all crossing numbers from 4 up to this")
        if default_max is not None:
            p.set_defaults(n_max=default_max)

    def add_format(p):
        p.add_argument("--format", choices=["table", "json", "csv"], default="table")

    def add_link(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--conway", help="comma-separated Conway form, e.g. 2,1,2")
        g.add_argument("--pq", help="fraction p/q")

    p = sub.add_parser("tabulate", help="list 2-bridge links by crossing number")
    add_range(p)
    add_format(p)
    p.add_argument("--fixture", help="reference fixture used to fill in ids")

    p = sub.add_parser("identify", help="match tabulated classes against a link table")
    add_range(p)
    add_format(p)
    p.add_argument("--table", help="table file (id<TAB>PD:[...]); default: bundled table")

    p = sub.add_parser("splitting", help="splitting numbers from the C(2a1,b1,...,2ak) pattern")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--id", help="link id, e.g. L10A87")
    g.add_argument("--conway")
    g.add_argument("--pq")
    g.add_argument("--n-max", type=int)
    add_format(p)
    p.add_argument("--fixture")
    p.add_argument("--table", help="table used to resolve ids missing from the fixture")

    p = sub.add_parser("verify", help="check the tabulation against the reference fixture")
    p.add_argument("--n-max", type=int, default=11)
    p.add_argument("--fixture")

    p = sub.add_parser("gauss", help="PD and Gauss code of the standard diagram")
    add_link(p)

    p = sub.add_parser("bracket", help="Kauffman bracket and identification key")
    add_link(p)
    return parser


# --- records ---------------------------------------------------------------------

def row_record(row: TabulationRow, link_id: str | None, sp: int | None) -> dict:
    c = row.link_class
    return {
        "n": row.crossing_number,
        "p": c.p,
        "q": c.canonical_q,
        "members": sorted(c.members),
        "conway": list(c.chosen_form),
        "raw_count": row.raw_count,
        "id": link_id,
        "sp": sp,
    }


def rows_from_records(records: Sequence[dict]) -> list[TabulationRow]:
    """Rebuild tabulation rows from exported JSON/CSV records."""
    out = []
    for r in records:
        cls = canonicalize(int(r["p"]), int(r["q"]))
        out.append(TabulationRow(int(r["n"]), cls, int(r.get("raw_count") or 0)))
    return out


def read_export(text: str, fmt: str) -> list[dict]:
    if fmt == "json":
        return json.loads(text)["rows"]
    if fmt == "csv":
        recs = []
        for r in csv.DictReader(io.StringIO(text)):
            recs.append({
                "n": int(r["n"]), "p": int(r["p"]), "q": int(r["q"]),
                "conway": [int(a) for a in r["conway"].split()],
                "id": r["id"] or None, "sp": int(r["sp"]) if r["sp"] else None,
            })
        return recs
    raise ValueError(f"cannot read format {fmt!r}")


def _emit(records: list[dict], fmt: str, out: TextIO, columns: list[str]) -> None:
    if fmt == "json":
        json.dump({"rows": records}, out, indent=2, sort_keys=True)
        out.write("\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(columns)
        for r in records:
            w.writerow([_cell(r.get(c)) for c in columns])
    else:
        cells = [[_cell(r.get(c)) or "-" for c in columns] for r in records]
        widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
        out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
        for row in cells:
            out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return " ".join(str(a) for a in v)
    return str(v)


# --- commands ----------------------------------------------------------------------

def _rows(args) -> list[TabulationRow]:
    if args.n is not None:
        n = args.n
        if not N_RANGE[0] <= n <= N_RANGE[1]:
            raise UsageError(f"--n must be in {N_RANGE[0]}..{N_RANGE[1]}")
        return tabulate(n)
    if not 4 <= args.n_max <= N_RANGE[1]:
        raise UsageError(f"--n-max must be in 4..{N_RANGE[1]}")
    return tabulate_range(args.n_max)


def _fixture_ids(fixture, rows) -> dict[tuple[int, int], str]:
    ids = {}
    for r in rows:
        for fr in fixture.for_n(r.crossing_number):
            if (fr.p, fr.q) in r.link_class:
                ids[(r.p, r.q)] = fr.id
    return ids


def _sp(cls: LinkClass) -> int | None:
    found = splitting_number(cls)
    return found[0] if found else None


def cmd_tabulate(args, out) -> int:
    rows = _rows(args)
    ids = _fixture_ids(load_reference_fixture(args.fixture), rows)
    recs = [row_record(r, ids.get((r.p, r.q)), _sp(r.link_class)) for r in rows]
    _emit(recs, args.format, out, CSV_COLUMNS)
    return EXIT_OK


def cmd_identify(args, out) -> int:
    rows = _rows(args)
    table = ingest_table(args.table) if args.table else shipped_table()
    recs = []
    for r in rows:
        ident = identify_class(r.link_class, table)
        rec = row_record(r, ident.matched_id, None)
        del rec["sp"]
        rec["status"] = ident.status
        rec["candidates"] = list(ident.ambiguity)
        recs.append(rec)
    _emit(recs, args.format, out, ["n", "p", "q", "conway", "id", "status", "candidates"])
    return EXIT_OK


def _parse_link(args) -> LinkClass:
    if args.conway:
        try:
            form = as_form(int(a) for a in args.conway.split(","))
        except ValueError as exc:
            raise UsageError(f"bad --conway: {exc}") from exc
        x = eval_cf(form)
        if x.denominator == x.numerator or x.numerator == 1:
            raise UsageError("--conway must describe a nontrivial 2-bridge link or knot")
        return canonicalize(x.numerator, x.denominator % x.numerator)
    try:
        x = Fraction(args.pq)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --pq: {args.pq!r}") from exc
    p, q = x.numerator, x.denominator
    if p < 2 or q < 1 or q % p == 0:
        raise UsageError("--pq needs p/q > 0 with p >= 2 and q not a multiple of p")
    return canonicalize(p, q % p)


def cmd_splitting(args, out) -> int:
    fixture = load_reference_fixture(args.fixture)
    if args.n_max is not None:
        if not 4 <= args.n_max <= N_RANGE[1]:
            raise UsageError(f"--n-max must be in 4..{N_RANGE[1]}")
        rows = tabulate_range(args.n_max)
        ids = _fixture_ids(fixture, rows)
        recs = [row_record(r, ids.get((r.p, r.q)), _sp(r.link_class)) for r in rows]
        recs = [r for r in recs if r["sp"] is not None]
        _emit(recs, args.format, out, CSV_COLUMNS)
        return EXIT_OK
    link_id = None
    if args.id:
        link_id = normalize_id(args.id)
        row = fixture.by_id().get(link_id)
        if row is not None:
            cls = canonicalize(row.p, row.q)
        else:
            cls = _class_from_table(link_id, args.table)
            if cls is None:
                out.write(f"{link_id}: not a 2-bridge link of the tabulated range\n")
                return EXIT_OK
    else:
        cls = _parse_link(args)
    found = splitting_number(cls)
    label = link_id or f"({cls.p},{cls.canonical_q})"
    if found is None:
        out.write(f"{label}: no minimal Conway form of the C(2a1,b1,...,2ak) shape; "
                  "splitting number not determined here\n")
    else:
        sp, cert = found
        out.write(f"{label}: sp = {sp} via {list(cert.pattern_form)}\n")
    return EXIT_OK


def _class_from_table(link_id: str, table_path) -> LinkClass | None:
    table = ingest_table(table_path) if table_path else shipped_table()
    try:
        entry = table[link_id]
    except KeyError:
        return None
    if not 4 <= entry.crossing_number <= 11:
        return None
    for r in tabulate(entry.crossing_number):
        if identify_class(r.link_class, [entry]).matched_id == link_id:
            return r.link_class
    return None


def cmd_verify(args, out, err) -> int:
    if not 4 <= args.n_max <= N_RANGE[1]:
        raise UsageError(f"--n-max must be in 4..{N_RANGE[1]}")
    fixture = load_reference_fixture(args.fixture)
    report = verify_fixture(tabulate_range(args.n_max), fixture)
    out.write(report.summary() + "\n")
    for line in report.discrepancies:
        err.write(line + "\n")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _diagram_for(args):
    if args.conway:
        try:
            form = as_form(int(a) for a in args.conway.split(","))
        except ValueError as exc:
            raise UsageError(f"bad --conway: {exc}") from exc
    else:
        form = _parse_link(args).chosen_form
    return form, build_diagram(form)


def cmd_gauss(args, out) -> int:
    form, d = _diagram_for(args)
    out.write(f"conway: {','.join(map(str, form))}\n")
    out.write(f"PD: {d}\n")
    out.write(f"gauss: {gauss_code(d)}\n")
    return EXIT_OK


def cmd_bracket(args, out) -> int:
    form, d = _diagram_for(args)
    b = kauffman_bracket(d)
    g = gauss_code(d)
    out.write(f"conway: {','.join(map(str, form))}\n")
    out.write(f"bracket: {b.serialize()}\n")
    out.write(f"writhe: {writhe(g)}\n")
    if component_count(d) == 2:
        out.write(f"linking_number: {linking_number(g)}\n")
        out.write(f"key: {identification_key(d, b)}\n")
    return EXIT_OK


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify":
            return cmd_verify(args, out, err)
        handler = {
            "tabulate": cmd_tabulate,
            "identify": cmd_identify,
            "splitting": cmd_splitting,
            "gauss": cmd_gauss,
            "bracket": cmd_bracket,
        }[args.command]
        return handler(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except CapacityError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (OSError, TableError, json.JSONDecodeError, KeyError) as exc:
        err.write(f"I/O error: {exc}\n")
        return EXIT_IO


def main() -> None:
    sys.exit(run())
