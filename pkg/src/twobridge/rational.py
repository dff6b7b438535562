"""Continued fractions and integer compositions.

Fractions are :class:`fractions.Fraction` values; a Conway form is a plain
tuple of positive integers ``(a1, ..., an)`` read top-down, so that
``(a1, ..., an)`` stands for ``a1 + 1/(a2 + 1/(... + 1/an))``.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

ConwayForm = tuple[int, ...]

__all__ = [
    "ConwayForm",
    "as_form",
    "eval_cf",
    "cf_expand",
    "all_expansions",
    "compositions",
    "expansions",
    "crossing_count",
]


def as_form(entries: Iterable[int]) -> ConwayForm:
    """Validate ``entries`` and return them as a Conway form tuple."""
    form = tuple(int(a) for a in entries)
    if not form:
        raise ValueError("a Conway form needs at least one entry")
    if any(a < 1 for a in form):
        raise ValueError(f"Conway form entries must be positive: {form}")
    return form


def crossing_count(form: Sequence[int]) -> int:
    return sum(form)


def eval_cf(form: Sequence[int]) -> Fraction:
    """Evaluate a positive continued fraction top-down.

    >>> eval_cf((2, 1, 2))
    Fraction(8, 3)
    """
    form = as_form(form)
    # convergent recurrence keeps everything in ints
    p, q = form[-1], 1
    for a in reversed(form[:-1]):
        p, q = a * p + q, p
    return Fraction(p, q)


def cf_expand(x: Fraction) -> ConwayForm:
    """Euclidean expansion of ``x > 0``; the last entry is >= 2 unless x == 1."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"expected a positive fraction, got {x}")
    p, q = x.numerator, x.denominator
    out = []
    while q:
        a, r = divmod(p, q)
        out.append(a)
        p, q = q, r
    if out[0] == 0:
        # x < 1 has no all-positive top-down expansion
        raise ValueError(f"{x} < 1 has no positive expansion")
    return tuple(out)


def all_expansions(x: Fraction) -> list[ConwayForm]:
    """Both all-positive expansions of ``x``: the Euclidean one and its
    ``[..., a, 1]`` variant. Only one exists when ``x == 1``."""
    base = cf_expand(x)
    if base == (1,):
        return [base]
    alt = base[:-1] + (base[-1] - 1, 1)
    return sorted([base, alt])


def compositions(n: int) -> list[ConwayForm]:
    """All 2**(n-1) compositions of ``n`` in lexicographic order."""
    if n < 1:
        raise ValueError(f"compositions need n >= 1, got {n}")
    out = []
    # each of the n-1 gaps between unit parts is either a cut or a join
    for cuts in product((False, True), repeat=n - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    out.sort()
    return out


def expansions(target: Fraction, total: int) -> set[ConwayForm]:
    """Compositions of ``total`` whose continued fraction equals ``target``.

    Deliberately brute force: every composition of ``total`` is evaluated.
    """
    target = Fraction(target)
    return {c for c in compositions(total) if eval_cf(c) == target}
