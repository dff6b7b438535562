import cmath
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from twobridge.diagram import PlanarDiagram, build_diagram, gauss_code, mirror, relabel
from twobridge.equivalence import canonicalize
from twobridge.invariants import (
    CapacityError,
    identification_key,
    kauffman_bracket,
    linking_number,
    normalized_bracket,
    smoothing_profile,
    spanning_tree_count,
    writhe,
)
from twobridge.laurent import Laurent
from twobridge.rational import compositions, eval_cf, expansions

ZETA8 = cmath.exp(1j * cmath.pi / 4)


def oracle_bracket(pd):
    """Plain state sum: dict-based union-find, one state at a time."""
    if not pd:
        return {0: 1}
    terms = {}
    labels = {a for x in pd for a in x}
    for state in product((0, 1), repeat=len(pd)):
        parent = {a: a for a in labels}

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        for (a, b, c, d), s in zip(pd, state):
            pairs = ((a, b), (c, d)) if s else ((a, d), (b, c))
            for u, v in pairs:
                parent[find(u)] = find(v)
        loops = len({find(a) for a in labels})
        exp = 2 * sum(state) - len(pd)
        # delta^(loops-1), delta = -A^2 - A^-2
        poly = {exp: 1}
        for _ in range(loops - 1):
            nxt = {}
            for k, v in poly.items():
                nxt[k + 2] = nxt.get(k + 2, 0) - v
                nxt[k - 2] = nxt.get(k - 2, 0) - v
            poly = nxt
        for k, v in poly.items():
            terms[k] = terms.get(k, 0) + v
    return {k: v for k, v in terms.items() if v}


def add_kink(d, positive=True):
    """Insert a curl just before crossing 0 on its incoming under-arc."""
    x = d.crossings[0][0]
    y, z = [max(a for c in d.crossings for a in c) + k for k in (1, 2)]
    first = (z,) + d.crossings[0][1:]
    kink = (x, z, y, y) if positive else (x, y, y, z)
    return PlanarDiagram((first,) + d.crossings[1:] + (kink,))


def test_unknot_and_kinks():
    assert kauffman_bracket(PlanarDiagram(())) == Laurent.const(1)
    pos = PlanarDiagram(((1, 2, 2, 1),))
    neg = PlanarDiagram(((1, 1, 2, 2),))
    assert {kauffman_bracket(pos), kauffman_bracket(neg)} == {Laurent({3: -1}), Laurent({-3: -1})}
    for d in (pos, neg):
        w = writhe(gauss_code(d))
        assert kauffman_bracket(d) == Laurent({3 * w: -1})
        assert normalized_bracket(kauffman_bracket(d), w) == Laurent.const(1)


def test_hopf_bracket():
    d = build_diagram((2,))
    assert oracle_bracket(d.crossings) == {4: -1, -4: -1}
    assert kauffman_bracket(d) == Laurent({4: -1, -4: -1})
    assert kauffman_bracket(d).serialize() == "-1*A^-4+-1*A^4"


def test_bracket_matches_oracle():
    for n in range(1, 8):
        for c in compositions(n):
            d = build_diagram(c)
            assert kauffman_bracket(d).terms == oracle_bracket(d.crossings), c


def test_bracket_degree_bounds():
    for c in compositions(9):
        d = build_diagram(c)
        lo, hi = kauffman_bracket(d).degrees()
        assert -3 * 9 - 2 <= lo <= hi <= 3 * 9 + 2


def test_determinant_is_numerator():
    # |<D>| at A = e^(i pi/4) is the determinant, p for L(p, q)
    for n in range(1, 11):
        for c in compositions(n):
            val = abs(kauffman_bracket(build_diagram(c))(ZETA8))
            assert round(val) == eval_cf(c).numerator and abs(val - round(val)) < 1e-6


def test_kink_multiplies_bracket():
    for c in [(2,), (2, 1, 2), (3, 1, 1, 2)]:
        d = build_diagram(c)
        b = kauffman_bracket(d)
        for positive, factor in ((True, Laurent({3: -1})), (False, Laurent({-3: -1}))):
            k = add_kink(d, positive)
            assert kauffman_bracket(k) == factor * b
            assert writhe(gauss_code(k)) == writhe(gauss_code(d)) + (1 if positive else -1)


def test_capacity_limit():
    with pytest.raises(CapacityError):
        kauffman_bracket(build_diagram((21,)))


def test_writhe_and_linking():
    g = gauss_code(build_diagram((2,)))
    assert abs(linking_number(g)) == 1
    assert abs(writhe(g)) == 2
    assert abs(linking_number(gauss_code(build_diagram((4,))))) == 2
    assert linking_number(gauss_code(build_diagram((2, 1, 2)))) == 0
    with pytest.raises(ValueError):
        linking_number(gauss_code(build_diagram((3,))))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=4), st.randoms(use_true_random=False))
def test_bracket_and_key_ignore_labels(entries, rnd):
    d = build_diagram(entries)
    labels = sorted({a for x in d.crossings for a in x})
    new = [10 * a + 7 for a in labels]
    rnd.shuffle(new)
    order = list(range(d.crossing_count))
    rnd.shuffle(order)
    e = relabel(d, dict(zip(labels, new)), order)
    assert kauffman_bracket(e) == kauffman_bracket(d)
    assert identification_key(e) == identification_key(d)


def test_key_examples():
    k = identification_key(build_diagram((2, 1, 4)))
    assert k == identification_key(build_diagram((4, 1, 2)))
    assert identification_key(build_diagram((2, 3, 2))) != identification_key(build_diagram((3, 1, 1, 2)))
    for c in [(2,), (2, 1, 4), (2, 2, 1, 3), (3, 3)]:
        d = build_diagram(c)
        assert identification_key(mirror(d)) == identification_key(d)


def test_key_consistent_on_classes_up_to_9():
    for n in range(4, 10):
        for c in compositions(n):
            x = eval_cf(c)
            if x.numerator % 2:
                continue
            cls = canonicalize(x.numerator, x.denominator)
            assert identification_key(build_diagram(c)) == identification_key(build_diagram(cls.chosen_form))


def test_bracket_alone_collides_at_eleven():
    a = identification_key(build_diagram((3, 1, 1, 1, 2, 3)))
    b = identification_key(build_diagram((2, 2, 1, 1, 3, 2)))
    assert eval_cf((3, 1, 1, 1, 2, 3)) == Fraction(98, 27)
    assert eval_cf((2, 2, 1, 1, 3, 2)) == Fraction(98, 41)
    assert a.bracket_part == b.bracket_part
    assert a != b


def smooth(pd, i, a_smoothing):
    """Remove crossing i, joining its arcs pairwise; returns the new PD."""
    a, b, c, d = pd[i]
    pairs = ((a, b), (c, d)) if a_smoothing else ((a, d), (b, c))
    rename = {}

    def root(x):
        while x in rename:
            x = rename[x]
        return x

    for u, v in pairs:
        ru, rv = root(u), root(v)
        if ru != rv:
            rename[ru] = rv
    rest = [tuple(root(x) for x in cr) for j, cr in enumerate(pd) if j != i]
    return rest


def test_smoothing_profile_matches_smoothed_determinants():
    for c in [(2, 1, 2), (3, 3), (2, 1, 1, 3), (2, 2, 1, 3), (3, 1, 1, 1, 2, 3)]:
        d = build_diagram(c)
        pairs = []
        for i in range(d.crossing_count):
            dets = []
            for s in (True, False):
                rest = smooth(d.crossings, i, s)
                val = abs(kauffman_bracket(PlanarDiagram(tuple(rest)))(ZETA8)) if rest else 1.0
                dets.append(round(val))
            pairs.append(tuple(sorted(dets)))
        assert smoothing_profile(d) == tuple(sorted(pairs)), c


def test_spanning_tree_count():
    # K4 has 16 spanning trees; a triangle with a doubled edge has 5
    k4 = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    assert spanning_tree_count(range(4), k4) == 16
    assert spanning_tree_count(range(3), [(0, 1), (0, 1), (1, 2), (0, 2)]) == 5
    assert spanning_tree_count([0, 1], []) == 0
