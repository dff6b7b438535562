"""Tabulation of 2-bridge links by crossing number.

The pipeline runs over all compositions of ``n``: evaluate each as a
continued fraction, keep those with even numerator (links), and collapse
them into Schubert classes.
"""
from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .equivalence import LinkClass, canonicalize
from .rational import ConwayForm, compositions, eval_cf

__all__ = ["RawCandidate", "TabulationRow", "enumerate_raw", "tabulate", "tabulate_range"]


@dataclass(frozen=True)
class RawCandidate:
    form: ConwayForm
    fraction: Fraction

    @property
    def pq(self) -> tuple[int, int]:
        return self.fraction.numerator, self.fraction.denominator


@dataclass(frozen=True)
class TabulationRow:
    crossing_number: int
    link_class: LinkClass
    raw_count: int

    @property
    def p(self) -> int:
        return self.link_class.p

    @property
    def q(self) -> int:
        return self.link_class.canonical_q

    @property
    def form(self) -> ConwayForm:
        return self.link_class.chosen_form


def enumerate_raw(n: int) -> list[RawCandidate]:
    """Compositions of ``n`` whose continued fraction has an even numerator."""
    out = []
    for form in compositions(n):
        x = eval_cf(form)
        if x.numerator % 2 == 0:
            out.append(RawCandidate(form, x))
    return out


def tabulate(n: int) -> list[TabulationRow]:
    """One row per distinct link class among the ``n``-crossing candidates,
    ordered by ``(p, canonical_q)``."""
    groups: dict[tuple[int, int], list[RawCandidate]] = defaultdict(list)
    classes: dict[tuple[int, int], LinkClass] = {}
    for cand in enumerate_raw(n):
        p, q = cand.pq
        cls = canonicalize(p, q)
        key = (p, cls.canonical_q)
        classes.setdefault(key, cls)
        groups[key].append(cand)
    rows = []
    for key in sorted(groups):
        cls = classes[key]
        # the class's own choice must be one of the candidates we saw
        assert cls.chosen_form in {c.form for c in groups[key]}
        rows.append(TabulationRow(n, cls, len(groups[key])))
    return rows


def tabulate_range(n_max: int, n_min: int = 4, workers: int | None = None) -> list[TabulationRow]:
    """Rows for every crossing number ``n_min <= n <= n_max``, ascending in n."""
    ns = range(n_min, n_max + 1)
    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(tabulate, ns))
    else:
        parts = [tabulate(n) for n in ns]
    return [row for part in parts for row in part]
