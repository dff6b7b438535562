"""Diagram invariants used to recognise links in a table.

The Kauffman bracket is evaluated as an explicit sum over all ``2**c``
smoothings. Loops are counted for a whole batch of states at once with numpy:
every arc touches exactly two smoothing connections, so the smoothed diagram
is a disjoint union of cycles and the loop count is the number of connected
components, found by min-label propagation.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .diagram import GaussCode, PlanarDiagram, face_orbits, gauss_code
from .laurent import Laurent

__all__ = [
    "CapacityError",
    "MAX_CROSSINGS",
    "IdentificationKey",
    "kauffman_bracket",
    "state_counts",
    "writhe",
    "linking_number",
    "normalized_bracket",
    "identification_key",
    "tait_graph",
    "spanning_tree_count",
    "smoothing_profile",
    "DELTA",
]

MAX_CROSSINGS = 20
_CHUNK = 1 << 13

DELTA = Laurent({2: -1, -2: -1})

# slot partner under each smoothing: A joins (0,1),(2,3); B joins (0,3),(1,2)
_PARTNER_A = np.array([1, 0, 3, 2])
_PARTNER_B = np.array([3, 2, 1, 0])


class CapacityError(ValueError):
    """Diagram too large for an exhaustive state sum."""


def state_counts(d: PlanarDiagram) -> np.ndarray:
    """``counts[a, l]`` = number of states with ``a`` A-smoothings and ``l`` loops."""
    c = d.crossing_count
    if c > MAX_CROSSINGS:
        raise CapacityError(f"{c} crossings exceeds the state-sum limit of {MAX_CROSSINGS}")
    labels = sorted({a for x in d.crossings for a in x})
    index = {a: i for i, a in enumerate(labels)}
    m = len(labels)
    pd = np.array([[index[a] for a in x] for x in d.crossings], dtype=np.int64).reshape(c, 4)

    # each arc occurs at two (crossing, slot) places
    occ_c = np.zeros((m, 2), dtype=np.int64)
    occ_s = np.zeros((m, 2), dtype=np.int64)
    fill = np.zeros(m, dtype=np.int64)
    for ci in range(c):
        for si in range(4):
            a = pd[ci, si]
            occ_c[a, fill[a]] = ci
            occ_s[a, fill[a]] = si
            fill[a] += 1
    if not np.all(fill == 2):
        raise ValueError("every arc must appear exactly twice")
    nb_a = pd[occ_c, _PARTNER_A[occ_s]]  # (m, 2) neighbours if that crossing is A-smoothed
    nb_b = pd[occ_c, _PARTNER_B[occ_s]]

    counts = np.zeros((c + 1, m + 1), dtype=np.int64)
    total = 1 << c
    for lo in range(0, total, _CHUNK):
        states = np.arange(lo, min(total, lo + _CHUNK), dtype=np.int64)
        bits = (states[:, None, None] >> occ_c[None, :, :]) & 1  # (S, m, 2)
        nb = np.where(bits == 1, nb_a[None], nb_b[None])
        lab = np.broadcast_to(np.arange(m), (len(states), m)).copy()
        while True:
            new = np.minimum(lab, np.minimum(
                np.take_along_axis(lab, nb[:, :, 0], axis=1),
                np.take_along_axis(lab, nb[:, :, 1], axis=1)))
            # pointer jumping shortens long cycles
            new = np.take_along_axis(new, new, axis=1)
            if np.array_equal(new, lab):
                break
            lab = new
        loops = (lab == np.arange(m)).sum(axis=1)
        n_a = np.zeros(len(states), dtype=np.int64)
        for k in range(c):
            n_a += (states >> k) & 1
        np.add.at(counts, (n_a, loops), 1)
    return counts


def kauffman_bracket(d: PlanarDiagram) -> Laurent:
    """Bracket with loop value ``-A^2 - A^-2``, normalised so the empty
    diagram (and the standard unknot) evaluates to 1."""
    c = d.crossing_count
    if c == 0:
        return Laurent.const(1)
    counts = state_counts(d)
    out = Laurent()
    for a, l in zip(*np.nonzero(counts)):
        out = out + Laurent.monomial(2 * int(a) - c, int(counts[a, l])) * DELTA ** (int(l) - 1)
    return out


def writhe(g: GaussCode) -> int:
    signs = {}
    for comp in g.components:
        for v in comp:
            signs[v.crossing] = v.sign
    return sum(signs.values())


def linking_number(g: GaussCode) -> int:
    if len(g.components) != 2:
        raise ValueError(f"linking number needs a 2-component code, got {len(g.components)}")
    first = {v.crossing for v in g.components[0]}
    second = {v.crossing for v in g.components[1]}
    mixed = first & second
    signs = {v.crossing: v.sign for v in g.components[0] if v.crossing in mixed}
    total = sum(signs.values())
    assert total % 2 == 0
    return total // 2


def normalized_bracket(bracket: Laurent, w: int) -> Laurent:
    """``(-A^3)^(-w) * bracket``."""
    return (Laurent.monomial(3, -1) ** (-w)) * bracket


def _bareiss_det(m: list[list[int]]) -> int:
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    m = [row[:] for row in m]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def spanning_tree_count(vertices, edges) -> int:
    """Kirchhoff count of spanning trees; loops are ignored, multi-edges count."""
    vs = sorted(set(vertices))
    if len(vs) <= 1:
        return 1
    idx = {v: i for i, v in enumerate(vs)}
    lap = [[0] * len(vs) for _ in vs]
    for u, v in edges:
        if u == v:
            continue
        i, j = idx[u], idx[v]
        lap[i][i] += 1
        lap[j][j] += 1
        lap[i][j] -= 1
        lap[j][i] -= 1
    return abs(_bareiss_det([row[1:] for row in lap[1:]]))


def tait_graph(d: PlanarDiagram) -> list[tuple[int, int]]:
    """One edge per crossing joining the faces at its (0,1) and (2,3) corners.

    For an alternating diagram these corners all have the same checkerboard
    colour, so this is a Tait graph of the diagram.
    """
    orbit = face_orbits(d)
    return [(orbit[(c, 1)], orbit[(c, 3)]) for c in range(d.crossing_count)]


def smoothing_profile(d: PlanarDiagram) -> tuple[tuple[int, int], ...]:
    """Sorted multiset of unordered determinant pairs, one per crossing, of
    the two diagrams obtained by smoothing that crossing.

    On the Tait graph these are the spanning-tree counts after deleting and
    after contracting the crossing's edge. Flypes act on Tait graphs by
    2-isomorphisms, which preserve both counts edge by edge, so for reduced
    alternating diagrams the profile depends only on the link; mirroring swaps
    the Tait graph with its dual, which only swaps the two entries of a pair.
    """
    edges = tait_graph(d)
    verts = {v for e in edges for v in e}
    out = []
    for i, (u, v) in enumerate(edges):
        rest = edges[:i] + edges[i + 1:]
        deleted = spanning_tree_count(verts, rest)
        merged = [(u if a == v else a, u if b == v else b) for a, b in rest]
        contracted = spanning_tree_count(verts - {v}, merged) if u != v else deleted
        out.append(tuple(sorted((deleted, contracted))))
    return tuple(sorted(out))


@dataclass(frozen=True)
class IdentificationKey:
    """Label-, orientation- and mirror-free fingerprint of a diagram.

    ``polys`` holds the writhe-normalised brackets over both relative
    orientations, closed under ``A -> 1/A``; ``profile`` is the
    :func:`smoothing_profile`. The bracket part alone does not separate all
    alternating links (e.g. the 2-bridge links 98/27 and 98/41 share it).
    """

    crossing_number: int
    polys: tuple[str, ...]
    profile: tuple[tuple[int, int], ...] = ()

    @property
    def bracket_part(self) -> tuple[int, tuple[str, ...]]:
        return self.crossing_number, self.polys

    def __str__(self) -> str:
        prof = " ".join(f"{a}:{b}" for a, b in self.profile)
        return " ; ".join(self.polys) + " | " + prof


def identification_key(d: PlanarDiagram, bracket: Laurent | None = None) -> IdentificationKey:
    """Key that does not depend on labels, orientations or mirror image.

    ``bracket`` may be passed in when already known.
    """
    if bracket is None:
        bracket = kauffman_bracket(d)
    g = gauss_code(d) if d.crossings else GaussCode(((),))
    w = writhe(g)
    writhes = [w]
    if len(g.components) == 2:
        # flipping one component negates every mixed crossing
        writhes.append(w - 4 * linking_number(g))
    elif len(g.components) > 2:
        raise ValueError("identification keys are defined for knots and 2-component links")
    polys = set()
    for wi in writhes:
        f = normalized_bracket(bracket, wi)
        polys.add(f.serialize())
        polys.add(f.mirror().serialize())
    return IdentificationKey(d.crossing_count, tuple(sorted(polys)), smoothing_profile(d))
