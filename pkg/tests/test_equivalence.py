from fractions import Fraction
from math import gcd

import pytest

from twobridge.equivalence import (
    NotCoprimeError,
    canonicalize,
    class_members,
    mod_inverse,
    reverse_orientation,
    unoriented_equivalent,
)
from twobridge.rational import compositions, eval_cf, expansions


def brute_inverse(q, p):
    return next(x for x in range(1, p) if q * x % p == 1)


def test_mod_inverse_examples():
    assert mod_inverse(3, 14) == 5
    assert mod_inverse(11, 14) == 9 == brute_inverse(11, 14)
    for p in range(2, 30):
        assert mod_inverse(1, p) == 1


def test_mod_inverse_non_coprime():
    with pytest.raises(NotCoprimeError):
        mod_inverse(4, 14)


def test_mod_inverse_involution():
    for p in range(2, 201):
        for q in range(1, p):
            if gcd(q, p) == 1:
                qi = mod_inverse(q, p)
                assert qi == brute_inverse(q, p)
                assert mod_inverse(qi, p) == q


def test_unoriented_equivalent():
    assert unoriented_equivalent((14, 3), (14, 5))
    assert not unoriented_equivalent((14, 3), (16, 3))
    assert unoriented_equivalent((18, 5), (18, 11))
    assert unoriented_equivalent((18, 5), (18, 5))
    assert not unoriented_equivalent((18, 5), (18, 7))


def test_reverse_orientation():
    assert reverse_orientation((14, 5)) == (14, 9)
    assert reverse_orientation((4, 1)) == (4, 3)
    assert reverse_orientation((18, 5)) == (18, 13)


def test_class_members_examples():
    assert class_members(14, 3) == {3, 5, 9, 11}
    assert class_members(26, 5) == {5, 21}
    assert class_members(4, 1) == {1, 3}


def test_class_members_closed_and_sized():
    for p in range(2, 145, 2):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            m = class_members(p, q)
            assert len(m) in (1, 2, 4)
            for x in m:
                assert x % 2 == 1 and gcd(x, p) == 1
                assert mod_inverse(x, p) in m
                assert p - x in m


def test_canonicalize_examples():
    assert canonicalize(14, 9).canonical_q == 3
    assert canonicalize(16, 9).canonical_q == 7
    assert canonicalize(16, 9).members == {7, 9}
    assert canonicalize(8, 3).canonical_q == 3


def test_canonicalize_constant_on_class():
    for p in range(4, 101, 2):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            c = canonicalize(p, q)
            assert c.canonical_q == min(c.members)
            for other in c.members:
                assert canonicalize(p, other) == c
            assert canonicalize(p, c.canonical_q) == c


def test_chosen_form_is_least_minimal_expansion():
    # brute force over all members' expansions of total = crossing number
    for n in range(4, 10):
        for comp in compositions(n):
            x = eval_cf(comp)
            if x.numerator % 2:
                continue
            c = canonicalize(x.numerator, x.denominator % x.numerator)
            forms = set()
            for q in c.members:
                forms |= expansions(Fraction(c.p, q), n)
            assert comp in forms
            assert c.chosen_form == min(forms, key=lambda f: (len(f), f))
            assert sum(c.chosen_form) == n == c.crossing_number


def test_degenerate_flag():
    # 3 * 3 = 9 = -1 mod 10, so 3^-1 = 7 = 10 - 3
    assert canonicalize(10, 3).degenerate
    assert canonicalize(10, 3).members == {3, 7}
    assert not canonicalize(14, 3).degenerate


def test_fixture_rows_in_their_class(fixture):
    for r in fixture.rows:
        c = canonicalize(r.p, r.q)
        assert r.q in c.members
        assert eval_cf(r.conway) == Fraction(r.p, r.q)
