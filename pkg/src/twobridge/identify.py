"""Matching tabulated classes against a link table, and checking the
tabulation against the transcribed tables.

Table files hold one link per line, ``id<TAB>PD:[X(a,b,c,d),...]``, with
``#`` starting a comment line. Matching is by :class:`IdentificationKey`
within a single crossing number, so the diagram conventions of the table do
not matter.
"""
from __future__ import annotations

import io
import json
import os
import re
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterable, TextIO

from .diagram import DiagramError, PlanarDiagram, build_diagram, parse_pd
from .enumerator import TabulationRow
from .equivalence import LinkClass
from .invariants import IdentificationKey, identification_key
from .rational import ConwayForm

__all__ = [
    "TableError",
    "LinkTableEntry",
    "LinkTable",
    "Identification",
    "FixtureRow",
    "ReferenceFixture",
    "VerificationReport",
    "normalize_id",
    "ingest_table",
    "shipped_table",
    "identify_class",
    "load_reference_fixture",
    "verify_fixture",
    "key_collisions",
]

_ID = re.compile(r"^L(\d+)([AN])(\d+)$")


class TableError(ValueError):
    """Unreadable table record; ``line`` is 1-based when known."""

    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def normalize_id(name: str) -> str:
    """``l7a4`` / ``L7a4`` / ``L_{7}A_{4}`` -> ``L7A4``."""
    s = re.sub(r"[\s_{}]", "", name).upper()
    return s


@dataclass(frozen=True)
class LinkTableEntry:
    id: str
    crossing_number: int
    pd_code: PlanarDiagram
    key: IdentificationKey = field(repr=False)


class LinkTable:
    """Ingested entries indexed by crossing number and key."""

    def __init__(self, entries: Iterable[LinkTableEntry]):
        self.entries = list(entries)
        self.by_id = {e.id: e for e in self.entries}
        self._index: dict[tuple[int, IdentificationKey], list[str]] = defaultdict(list)
        for e in self.entries:
            self._index[(e.crossing_number, e.key)].append(e.id)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, id_: str) -> LinkTableEntry:
        return self.by_id[normalize_id(id_)]

    def lookup(self, crossing_number: int, key: IdentificationKey) -> list[str]:
        return list(self._index.get((crossing_number, key), []))


def _lines(source) -> Iterable[str]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            yield from fh
    else:
        yield from source


def ingest_table(source: str | os.PathLike | TextIO | Iterable[str]) -> LinkTable:
    """Read a table (a path, an open file or any iterable of lines) and
    compute every entry's key.

    Raises :class:`TableError` for bad records and repeated ids.
    """
    entries = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise TableError("expected 'id<TAB>PD:[...]'", lineno)
        name, pd_text = normalize_id(parts[0]), parts[1].strip()
        if not pd_text.startswith("PD:"):
            raise TableError(f"PD field must start with 'PD:', got {pd_text[:12]!r}", lineno)
        if name in seen:
            raise TableError(f"duplicate id {name} (first on line {seen[name]})", lineno)
        seen[name] = lineno
        try:
            d = parse_pd(pd_text)
            key = identification_key(d)
        except (DiagramError, ValueError) as exc:
            raise TableError(f"malformed PD code for {name}: {exc}", lineno) from exc
        m = _ID.match(name)
        if m and int(m.group(1)) != d.crossing_count:
            raise TableError(
                f"{name} names {m.group(1)} crossings but its PD code has {d.crossing_count}", lineno
            )
        entries.append(LinkTableEntry(name, d.crossing_count, d, key))
    return LinkTable(entries)


@lru_cache(maxsize=1)
def shipped_table() -> LinkTable:
    """The bundled table of 2-component alternating links up to 11 crossings."""
    text = resources.files("twobridge.data").joinpath("link_table.tsv").read_text("utf-8")
    return ingest_table(io.StringIO(text))


@dataclass(frozen=True)
class Identification:
    link_class: LinkClass
    matched_id: str | None
    ambiguity: tuple[str, ...] = ()

    @property
    def status(self) -> str:
        if self.matched_id:
            return "matched"
        return "ambiguous" if self.ambiguity else "unmatched"


@lru_cache(maxsize=4096)
def _form_key(form: ConwayForm) -> IdentificationKey:
    return identification_key(build_diagram(form))


def identify_class(c: LinkClass, table: LinkTable | Iterable[LinkTableEntry]) -> Identification:
    """Look up the diagram of ``c.chosen_form`` among same-crossing entries."""
    if not isinstance(table, LinkTable):
        table = LinkTable(table)
    hits = sorted(table.lookup(c.crossing_number, _form_key(c.chosen_form)), key=_id_order)
    if len(hits) == 1:
        return Identification(c, hits[0])
    return Identification(c, None, tuple(hits))


def _id_order(name: str):
    m = _ID.match(name)
    return (int(m.group(1)), m.group(2), int(m.group(3))) if m else (0, name, 0)


# --- transcribed tables -------------------------------------------------------------

@dataclass(frozen=True)
class FixtureRow:
    n: int
    p: int
    q: int
    conway: ConwayForm
    id: str
    sp: int | None = None
    conway_alt: ConwayForm | None = None


@dataclass(frozen=True)
class ReferenceFixture:
    rows: tuple[FixtureRow, ...]
    splitting_listed: tuple[str, ...]
    raw_7_crossings: tuple[dict, ...]

    def by_id(self) -> dict[str, FixtureRow]:
        return {r.id: r for r in self.rows}

    def for_n(self, n: int) -> list[FixtureRow]:
        return [r for r in self.rows if r.n == n]


def load_reference_fixture(path: str | os.PathLike | None = None) -> ReferenceFixture:
    """Load the transcribed tables; the bundled copy unless ``path`` is given."""
    if path is None:
        text = resources.files("twobridge.data").joinpath("reference_tables.json").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    doc = json.loads(text)
    rows = []
    for r in doc["rows"]:
        rows.append(FixtureRow(
            n=int(r["n"]), p=int(r["p"]), q=int(r["q"]),
            conway=tuple(r["conway"]), id=normalize_id(r["id"]),
            sp=r.get("sp"),
            conway_alt=tuple(r["conway_alt"]) if r.get("conway_alt") else None,
        ))
    return ReferenceFixture(
        tuple(rows),
        tuple(normalize_id(i) for i in doc.get("splitting_listed", [])),
        tuple(doc.get("raw_7_crossings", [])),
    )


@dataclass
class VerificationReport:
    checked: int = 0
    discrepancies: list[str] = field(default_factory=list)
    per_n: dict[int, tuple[int, int]] = field(default_factory=dict)  # n -> (fixture, tabulated)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def summary(self) -> str:
        return f"{self.checked} classes checked, {len(self.discrepancies)} discrepancies"


def verify_fixture(tabulation: Iterable[TabulationRow], fixture: ReferenceFixture) -> VerificationReport:
    """Compare tabulated classes with fixture rows, crossing number by crossing
    number, matching rows to classes by Schubert class rather than by the
    printed pair."""
    by_n: dict[int, list[TabulationRow]] = defaultdict(list)
    for row in tabulation:
        by_n[row.crossing_number].append(row)
    report = VerificationReport()
    for n in sorted(by_n):
        rows = by_n[n]
        expected = fixture.for_n(n)
        report.per_n[n] = (len(expected), len(rows))
        if len(expected) != len(rows):
            report.discrepancies.append(
                f"n={n}: fixture has {len(expected)} rows, tabulation has {len(rows)}"
            )
        hits: dict[tuple[int, int], list[str]] = defaultdict(list)
        for fr in expected:
            report.checked += 1
            if sum(fr.conway) != n:
                report.discrepancies.append(f"n={n}: {fr.id} form {list(fr.conway)} sums to {sum(fr.conway)}")
            owners = [r for r in rows if (fr.p, fr.q) in r.link_class]
            if len(owners) != 1:
                report.discrepancies.append(
                    f"n={n}: {fr.id} ({fr.p},{fr.q}) lies in {len(owners)} tabulated classes"
                )
                continue
            hits[(owners[0].p, owners[0].q)].append(fr.id)
        for r in rows:
            if sum(r.form) != n:
                report.discrepancies.append(f"n={n}: chosen form {list(r.form)} sums to {sum(r.form)}")
            got = hits.get((r.p, r.q), [])
            if not got:
                report.discrepancies.append(
                    f"n={n}: tabulated class ({r.p},{r.q}) {list(r.form)} has no fixture row"
                )
            elif len(got) > 1:
                report.discrepancies.append(f"n={n}: class ({r.p},{r.q}) hit by {got}")
    return report


def key_collisions(rows: Iterable[TabulationRow], bracket_only: bool = False) -> list[list[tuple[int, int]]]:
    """Groups of distinct same-n classes whose identification keys coincide."""
    groups: dict[tuple, list[tuple[int, int]]] = defaultdict(list)
    for r in rows:
        k = _form_key(r.form)
        groups[(r.crossing_number, k.bracket_part if bracket_only else k)].append((r.p, r.q))
    return [sorted(g) for g in groups.values() if len(g) > 1]
