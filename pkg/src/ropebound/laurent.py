"""Exact integer Laurent polynomials in the two variables ``z`` and ``a``.

Terms are stored as a mapping ``(z_exponent, a_exponent) -> coefficient``
with zero coefficients dropped, so equality and hashing are structural.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

__all__ = ["LaurentPoly2", "Z", "A", "ONE", "ZERO"]

_TERM = re.compile(r"^(-?\d+)((?:\s+[za]\^-?\d+)*)$")


class LaurentPoly2:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            key = (int(i), int(j))
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k] != 0}
        self._hash = None

    @classmethod
    def monomial(cls, coeff: int = 1, z: int = 0, a: int = 0) -> "LaurentPoly2":
        return cls({(z, a): coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return LaurentPoly2(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return LaurentPoly2(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shift()")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, z: int = 0, a: int = 0) -> "LaurentPoly2":
        """Multiply by the monomial ``z**z * a**a``."""
        return LaurentPoly2({(i + z, j + a): c for (i, j), c in self._terms.items()})

    # -- inspection ------------------------------------------------------
    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def a_exponents(self) -> list[int]:
        return sorted({j for (_, j) in self._terms})

    def substitute_mirror(self) -> "LaurentPoly2":
        """The polynomial of the mirror image: ``a -> -1/a``."""
        return LaurentPoly2({(i, -j): c * (-1) ** (j % 2) for (i, j), c in self._terms.items()})

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- text ------------------------------------------------------------
    def serialize(self) -> str:
        """Sorted term list ``coeff z^i a^j`` joined by `` + ``.

        Zero exponents are omitted, so the constant one serializes as ``1``
        and the zero polynomial as ``0``.
        """
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self._terms.items():
            s = str(c)
            if i:
                s += f" z^{i}"
            if j:
                s += f" a^{j}"
            parts.append(s)
        return " + ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly2":
        text = text.strip()
        if text == "0":
            return ZERO
        acc = {}
        for raw in text.split(" + "):
            m = _TERM.match(raw.strip())
            if not m:
                raise ValueError(f"malformed polynomial term: {raw!r}")
            exps = {"z": 0, "a": 0}
            for var, e in re.findall(r"([za])\^(-?\d+)", m.group(2)):
                exps[var] += int(e)
            key = (exps["z"], exps["a"])
            acc[key] = acc.get(key, 0) + int(m.group(1))
        return cls(acc)

    def __str__(self):
        return self.serialize()

    def __repr__(self):
        return f"LaurentPoly2({self.serialize()!r})"


def _coerce(x):
    if isinstance(x, LaurentPoly2):
        return x
    if isinstance(x, int):
        return LaurentPoly2.constant(x)
    return NotImplemented


ZERO = LaurentPoly2()
ONE = LaurentPoly2.constant(1)
Z = LaurentPoly2.monomial(1, z=1)
A = LaurentPoly2.monomial(1, a=1)
