"""Planar diagrams of 2-bridge links.

A diagram is stored as a PD code: one 4-tuple of arc labels per crossing,
listed counterclockwise starting from the incoming under-strand. Everything
else (components, orientations, crossing signs, Gauss codes) is derived
from the tuples alone, so diagrams parsed from external tables go through
exactly the same code paths as the ones built here.

Construction follows the 4-plat picture: twist regions are added alternately
to the right (horizontal twists) and to the bottom (vertical twists) of a
rational tangle, starting from the innermost entry, and the tangle is closed
off by its numerator or denominator closure depending on which kind of twist
came last.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .rational import as_form

__all__ = [
    "DiagramError",
    "PlanarDiagram",
    "Visit",
    "GaussCode",
    "build_diagram",
    "gauss_code",
    "component_count",
    "crossing_signs",
    "mirror",
    "relabel",
    "is_planar",
    "face_orbits",
    "parse_pd",
    "format_pd",
]


class DiagramError(ValueError):
    """Structurally malformed PD code."""


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "crossings", tuple(tuple(int(v) for v in x) for x in self.crossings)
        )
        for x in self.crossings:
            if len(x) != 4:
                raise DiagramError(f"crossing {x} does not have four arcs")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def arc_count(self) -> int:
        return len({a for x in self.crossings for a in x})

    def __str__(self) -> str:
        return format_pd(self)


@dataclass(frozen=True)
class Visit:
    crossing: int  # 1-based index into the PD list
    over: bool
    sign: int


@dataclass(frozen=True)
class GaussCode:
    components: tuple[tuple[Visit, ...], ...]

    def __str__(self) -> str:
        return "/".join(
            ",".join(str(v.crossing if v.over else -v.crossing) for v in comp)
            for comp in self.components
        )


# --- construction -------------------------------------------------------------

class _Tangle:
    """Rational tangle under construction.

    Slots are edge ends; joining two ends merges their edges (union-find).
    Every crossing is drawn as an X whose SW-NE strand passes over; its slots
    are stored counterclockwise from NW as (NW, SW, SE, NE), so slots 0 and 2
    carry the under-strand.
    """

    def __init__(self):
        self.parent: list[int] = []
        self.crossings: list[list[int]] = []
        self.regions: list[int] = []
        top, bot = self._edge(), self._edge()
        self.nw = self.ne = top
        self.sw = self.se = bot

    def _edge(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, e: int) -> int:
        while self.parent[e] != e:
            self.parent[e] = self.parent[self.parent[e]]
            e = self.parent[e]
        return e

    def join(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)

    def _crossing(self, region: int):
        nw, sw, se, ne = (self._edge() for _ in range(4))
        self.crossings.append([nw, sw, se, ne])
        self.regions.append(region)
        return nw, sw, se, ne

    def twist_h(self, region: int) -> None:
        nw, sw, se, ne = self._crossing(region)
        self.join(nw, self.ne)
        self.join(sw, self.se)
        self.ne, self.se = ne, se

    def twist_v(self, region: int) -> None:
        nw, sw, se, ne = self._crossing(region)
        self.join(nw, self.sw)
        self.join(ne, self.se)
        self.sw, self.se = sw, se

    def close(self, numerator: bool) -> None:
        if numerator:
            self.join(self.nw, self.ne)
            self.join(self.sw, self.se)
        else:
            self.join(self.nw, self.sw)
            self.join(self.ne, self.se)


def build_diagram(form: Sequence[int]) -> PlanarDiagram:
    """Alternating 4-plat diagram of the Conway form ``form``.

    Crossings are numbered region by region in the order of ``form``; arcs are
    numbered along the component through crossing 1 (entering it on the
    under-strand), then along the other component.
    """
    form = as_form(form)
    t = _Tangle()
    k = len(form)
    # innermost entry first, twisting horizontally; alternate from there
    for depth, i in enumerate(range(k - 1, -1, -1)):
        twist = t.twist_h if depth % 2 == 0 else t.twist_v
        for _ in range(form[i]):
            twist(i)
    t.close(numerator=k % 2 == 1)

    order = sorted(range(len(t.crossings)), key=lambda j: (t.regions[j], j))
    slots = [[t.find(e) for e in t.crossings[j]] for j in order]
    return _label_by_traversal(slots)


def _ends(slots: Sequence[Sequence[int]]) -> dict[int, list[tuple[int, int]]]:
    where: dict[int, list[tuple[int, int]]] = {}
    for ci, x in enumerate(slots):
        for si, e in enumerate(x):
            where.setdefault(e, []).append((ci, si))
    bad = sorted(e for e, v in where.items() if len(v) != 2)
    if bad:
        raise DiagramError(f"arcs {bad} do not appear exactly twice")
    return where


def _trace(slots: Sequence[Sequence[int]]) -> list[list[tuple[int, int]]]:
    """Walk every strand of a diagram given as per-crossing slot lists.

    Returns one list per component of ``(crossing, entry_slot)`` pairs in
    travel order. Each component is oriented so that it enters its first
    available crossing on slot 0, the incoming under-slot of a PD tuple.
    """
    where = _ends(slots)
    seen: set[tuple[int, int]] = set()
    components = []

    def walk(c: int, s: int) -> list[tuple[int, int]]:
        comp = []
        while (c, s) not in seen:
            seen.add((c, s))
            out = (s + 2) % 4
            seen.add((c, out))
            comp.append((c, s))
            (c1, s1), (c2, s2) = where[slots[c][out]]
            c, s = (c2, s2) if (c1, s1) == (c, out) else (c1, s1)
        return comp

    while len(seen) < 4 * len(slots):
        start = next(
            ((c, 0) for c in range(len(slots)) if (c, 0) not in seen),
            None,
        )
        if start is None:
            start = min((c, s) for c in range(len(slots)) for s in range(4) if (c, s) not in seen)
        components.append(walk(*start))
    return components


def _label_by_traversal(slots: list[list[int]]) -> PlanarDiagram:
    """Turn crossings given by edge ids into a PD code with traversal labels."""
    label: dict[int, int] = {}
    under_in: dict[int, int] = {}
    for comp in _trace(slots):
        for c, s in comp:
            label[slots[c][s]] = len(label) + 1
            if s % 2 == 0:
                under_in[c] = s
    pd = []
    for c, x in enumerate(slots):
        r = under_in[c]
        pd.append(tuple(label[x[(r + k) % 4]] for k in range(4)))
    return PlanarDiagram(tuple(pd))


# --- analysis -------------------------------------------------------------------

def _oriented(d: PlanarDiagram) -> tuple[list[list[tuple[int, int]]], list[int]]:
    """Components as (crossing, entry slot) walks plus one sign per crossing."""
    comps = _trace(d.crossings)
    under_dir = [0] * d.crossing_count
    over_dir = [0] * d.crossing_count
    for comp in comps:
        for c, s in comp:
            if s % 2 == 0:
                under_dir[c] = 1 if s == 0 else -1
            else:
                over_dir[c] = 1 if s == 3 else -1
    # counterclockwise tuple (a, b, c, d): under a->c with over d->b is positive
    signs = [u * o for u, o in zip(under_dir, over_dir)]
    return comps, signs


def crossing_signs(d: PlanarDiagram) -> list[int]:
    return _oriented(d)[1]


def gauss_code(d: PlanarDiagram) -> GaussCode:
    """Gauss code of ``d``: per component, the crossings met in travel order.

    Components are ordered by their smallest arc label and each one starts at
    the visit entered through that arc.
    """
    comps, signs = _oriented(d)
    out = []
    for comp in comps:
        arcs = [d.crossings[c][s] for c, s in comp]
        k = arcs.index(min(arcs))
        comp = comp[k:] + comp[:k]
        out.append((min(arcs), tuple(Visit(c + 1, s % 2 == 1, signs[c]) for c, s in comp)))
    out.sort(key=lambda t: t[0])
    return GaussCode(tuple(v for _, v in out))


def component_count(d: PlanarDiagram) -> int:
    if not d.crossings:
        return 1
    return len(_trace(d.crossings))


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    """Switch every crossing; the result keeps the PD convention."""
    comps, _ = _oriented(d)
    over_in = {}
    for comp in comps:
        for c, s in comp:
            if s % 2:
                over_in[c] = s
    pd = []
    for c, x in enumerate(d.crossings):
        r = over_in[c]
        # the old over-strand becomes the under-strand, still read counterclockwise
        pd.append(tuple(x[(r + k) % 4] for k in range(4)))
    return PlanarDiagram(tuple(pd))


def relabel(d: PlanarDiagram, arc_map: dict[int, int], order: Iterable[int] | None = None) -> PlanarDiagram:
    """Rename arcs through ``arc_map`` and optionally permute the crossings."""
    xs = d.crossings if order is None else [d.crossings[i] for i in order]
    return PlanarDiagram(tuple(tuple(arc_map[a] for a in x) for x in xs))


def face_orbits(d: PlanarDiagram) -> dict[tuple[int, int], int]:
    """Face id of every dart ``(crossing, slot)`` of the rotation system.

    A face is traced by leaving along an arc and turning to the next slot
    counterclockwise at the far crossing, so the corner between slots ``s``
    and ``s + 1`` of a crossing lies on the face of dart ``(c, s + 1)``.
    """
    where = _ends(d.crossings)
    orbit: dict[tuple[int, int], int] = {}
    face = -1
    for c in range(d.crossing_count):
        for s in range(4):
            if (c, s) in orbit:
                continue
            face += 1
            cur = (c, s)
            while cur not in orbit:
                orbit[cur] = face
                (c1, s1), (c2, s2) = where[d.crossings[cur[0]][cur[1]]]
                far = (c2, s2) if (c1, s1) == cur else (c1, s1)
                cur = (far[0], (far[1] + 1) % 4)
    return orbit


def is_planar(d: PlanarDiagram) -> bool:
    """Euler characteristic check: V - E + F == 2 for each connected piece."""
    if not d.crossings:
        return True
    where = _ends(d.crossings)
    n = d.crossing_count
    faces = len(set(face_orbits(d).values()))
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for ends in where.values():
        parent[find(ends[0][0])] = find(ends[1][0])
    pieces = len({find(i) for i in range(n)})
    return n - 2 * n + faces == 2 * pieces


_X = re.compile(r"X\s*[\[(]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\])]")


def parse_pd(text: str) -> PlanarDiagram:
    """Parse ``[X(1,2,3,4), ...]`` (square brackets after X are accepted too)."""
    body = text.strip()
    if body.startswith("PD:"):
        body = body[3:].strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise DiagramError(f"PD code must be a bracketed list: {text!r}")
    inner = body[1:-1].strip()
    crossings = []
    pos = 0
    for m in _X.finditer(inner):
        gap = inner[pos:m.start()].strip().strip(",").strip()
        if gap:
            raise DiagramError(f"unexpected text {gap!r} in PD code")
        crossings.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
    if inner[pos:].strip().strip(","):
        raise DiagramError(f"unexpected text {inner[pos:]!r} in PD code")
    d = PlanarDiagram(tuple(crossings))
    _ends(d.crossings)
    return d


def format_pd(d: PlanarDiagram) -> str:
    return "[" + ",".join("X(%d,%d,%d,%d)" % x for x in d.crossings) + "]"
