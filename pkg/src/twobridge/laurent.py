"""Laurent polynomials in A with integer coefficients."""
from __future__ import annotations

import re
from typing import Mapping

__all__ = ["Laurent"]

_TERM = re.compile(r"^(-?\d+)\*A\^(-?\d+)$")


class Laurent:
    """Immutable sparse Laurent polynomial ``sum c_k A^k``; zero terms are dropped."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = {int(k): int(v) for k, v in (terms or {}).items() if v}
        self._hash = None

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> "Laurent":
        return cls({exp: coef})

    @classmethod
    def const(cls, c: int) -> "Laurent":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def degrees(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms), max(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent.const(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = Laurent.const(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Laurent({k: v * other for k, v in self._terms.items()})
        out: dict[int, int] = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return Laurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            (k, v), = self._terms.items()
            if v not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return Laurent({-k * -n: v ** -n})
        out = Laurent.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def mirror(self) -> "Laurent":
        """Substitute ``A -> 1/A``."""
        return Laurent({-k: v for k, v in self._terms.items()})

    def __call__(self, a: complex) -> complex:
        return sum(v * a ** k for k, v in self._terms.items())

    def serialize(self) -> str:
        """``coef*A^exp`` terms by ascending exponent, joined by ``+``; zero is ``0``."""
        if not self._terms:
            return "0"
        return "+".join(f"{self._terms[k]}*A^{k}" for k in sorted(self._terms))

    @classmethod
    def parse(cls, text: str) -> "Laurent":
        text = text.strip()
        if text == "0":
            return cls()
        terms: dict[int, int] = {}
        for chunk in text.split("+"):
            m = _TERM.match(chunk.strip())
            if not m:
                raise ValueError(f"bad term {chunk!r}")
            c, e = int(m.group(1)), int(m.group(2))
            terms[e] = terms.get(e, 0) + c
        return cls(terms)

    def __repr__(self):
        return f"Laurent({self.serialize()!r})"

    __str__ = serialize
