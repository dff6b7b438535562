"""Schubert equivalence of 2-bridge links.

A link ``L(p, q)`` is identified up to orientation and mirror image by ``p``
and the class of ``q`` under inversion mod ``p`` and ``q -> p - q``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .rational import ConwayForm, all_expansions

__all__ = [
    "LinkClass",
    "mod_inverse",
    "unoriented_equivalent",
    "reverse_orientation",
    "class_members",
    "canonicalize",
]


class NotCoprimeError(ValueError):
    pass


def mod_inverse(q: int, p: int) -> int:
    """Return ``q'`` in ``(0, p)`` with ``q * q' == 1 (mod p)``."""
    if p < 1:
        raise ValueError(f"modulus must be positive, got {p}")
    if gcd(q, p) != 1:
        raise NotCoprimeError(f"{q} is not invertible modulo {p}")
    if p == 1:
        return 0
    return pow(q, -1, p)


def unoriented_equivalent(a: tuple[int, int], b: tuple[int, int]) -> bool:
    (p, q), (p2, q2) = a, b
    if p != p2:
        return False
    return (q - q2) % p == 0 or (q * q2) % p == 1 % p


def reverse_orientation(a: tuple[int, int]) -> tuple[int, int]:
    """Pair for ``L(p, q)`` with one component reversed.

    The reversed link is ``L(p, q - p)``, the mirror of ``L(p, p - q)``; with
    mirrors quotiented out this is returned as ``(p, p - q)`` reduced mod p.
    """
    p, q = a
    if p <= 0 or q <= 0:
        raise ValueError("reverse_orientation expects p > 0 and q > 0")
    return p, (p - q) % p


def class_members(p: int, q: int) -> frozenset[int]:
    """All ``q'`` in ``(0, p)`` giving the same link as ``(p, q)`` up to
    orientation and mirror image."""
    _check_pair(p, q)
    qi = mod_inverse(q, p)
    return frozenset({q, qi, p - q, p - qi})


def _check_pair(p: int, q: int) -> None:
    if not 0 < q < p:
        raise ValueError(f"expected 0 < q < p, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise NotCoprimeError(f"({p}, {q}) is not coprime")


@dataclass(frozen=True, order=True)
class LinkClass:
    """One 2-bridge link up to orientation and mirror image.

    ``chosen_form`` is the lexicographically least expansion of minimal
    length over all members; all members' expansions share one entry-sum,
    the crossing number.
    """

    p: int
    canonical_q: int
    members: frozenset[int]
    chosen_form: ConwayForm
    # q^-1 == p - q: orientation reversal and inversion coincide
    degenerate: bool = False

    @property
    def crossing_number(self) -> int:
        return sum(self.chosen_form)

    @property
    def is_link(self) -> bool:
        return self.p % 2 == 0

    def member_forms(self) -> list[ConwayForm]:
        """Every all-positive expansion of every member, sorted."""
        forms = set()
        for q in self.members:
            forms.update(all_expansions(Fraction(self.p, q)))
        return sorted(forms)

    def __contains__(self, pq: tuple[int, int]) -> bool:
        p, q = pq
        return p == self.p and q % p in self.members


def _pick_form(forms) -> ConwayForm:
    return min(forms, key=lambda f: (len(f), f))


def canonicalize(p: int, q: int) -> LinkClass:
    """Canonical class of ``L(p, q)``; the representative is the least member.

    Also accepts odd ``p`` (knots), which are otherwise handled the same way.
    """
    members = class_members(p, q)
    cq = min(members)
    forms = set()
    for m in members:
        forms.update(all_expansions(Fraction(p, m)))
    totals = {sum(f) for f in forms}
    assert len(totals) == 1, f"members of ({p},{q}) disagree on crossing number"
    return LinkClass(
        p=p,
        canonical_q=cq,
        members=members,
        chosen_form=_pick_form(forms),
        degenerate=mod_inverse(q, p) == p - q,
    )
