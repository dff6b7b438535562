"""Splitting numbers from Conway forms ``C(2a1, b1, 2a2, ..., b_{k-1}, 2ak)``.

A 2-bridge link with such a form has splitting number ``a1 + ... + ak``.
For a class, every expansion of every member with entry-sum equal to the
crossing number is searched for the pattern; longer expansions are not
considered, so ``None`` only means the pattern does not occur at minimal
length.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .equivalence import LinkClass
from .rational import ConwayForm, as_form, expansions

__all__ = ["SplittingCertificate", "match_pattern", "splitting_number", "InconsistentCertificates"]


class InconsistentCertificates(AssertionError):
    """Two pattern matches for one class gave different splitting numbers."""


@dataclass(frozen=True)
class SplittingCertificate:
    pattern_form: ConwayForm
    a_values: tuple[int, ...]
    sp: int


def match_pattern(form: Sequence[int]) -> SplittingCertificate | None:
    form = as_form(form)
    if len(form) % 2 == 0:
        return None
    evens = form[0::2]
    if any(x % 2 for x in evens):
        return None
    a = tuple(x // 2 for x in evens)
    return SplittingCertificate(form, a, sum(a))


def splitting_number(c: LinkClass, crossing_number: int | None = None) -> tuple[int, SplittingCertificate] | None:
    """Splitting number of ``c`` if some minimal expansion fits the pattern.

    The certificate returned is the one on the lexicographically least
    matching form; all matches are checked to agree.
    """
    n = c.crossing_number if crossing_number is None else crossing_number
    certs = []
    for q in sorted(c.members):
        for form in expansions(Fraction(c.p, q), n):
            cert = match_pattern(form)
            if cert is not None:
                certs.append(cert)
    if not certs:
        return None
    certs.sort(key=lambda ct: ct.pattern_form)
    values = {ct.sp for ct in certs}
    if len(values) != 1:
        raise InconsistentCertificates(
            f"class ({c.p},{c.canonical_q}) gives splitting numbers {sorted(values)}"
        )
    return certs[0].sp, certs[0]
