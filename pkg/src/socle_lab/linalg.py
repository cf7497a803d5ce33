"""Fraction-free sparse elimination over the integers (hence exact over Q).

Vectors are dicts ``key -> int`` with arbitrary hashable keys. Rational input
is cleared of denominators before elimination; every stored row is kept
primitive (gcd 1) so entries stay small.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping

Key = Hashable


def integral(vec: Mapping[Key, int | Fraction]) -> dict[Key, int]:
    """Scale a rational vector to a primitive integer vector (same line)."""
    den = 1
    for c in vec.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    out = {k: int(c * den) for k, c in vec.items() if c}
    return _primitive(out)


def _primitive(vec: dict[Key, int]) -> dict[Key, int]:
    g = 0
    for c in vec.values():
        g = gcd(g, c)
        if g == 1:
            return vec
    if g > 1:
        return {k: c // g for k, c in vec.items()}
    return vec


def _combine(a: int, u: dict, b: int, v: dict) -> dict:
    """a*u - b*v, dropping zeros."""
    out = {k: a * c for k, c in u.items()}
    for k, c in v.items():
        val = out.get(k, 0) - b * c
        if val:
            out[k] = val
        else:
            out.pop(k, None)
    return out


class Echelon:
    """Incrementally built echelon basis of a subspace.

    Each stored row has a pivot key that appears in no other stored row's
    pivot position; insertion reduces the new vector against existing pivots.
    """

    def __init__(self) -> None:
        self.rows: dict[Key, dict[Key, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping[Key, int | Fraction]) -> dict[Key, int]:
        v = integral(vec)
        changed = True
        while v and changed:
            changed = False
            for k in list(v):
                row = self.rows.get(k)
                if row is None or k not in v:
                    continue
                p, c = row[k], v[k]
                g = gcd(p, c)
                v = _combine(p // g, v, c // g, row)
                changed = True
            v = _primitive(v) if v else v
        return v

    def add(self, vec: Mapping[Key, int | Fraction]) -> bool:
        """Insert ``vec``; return True iff it was independent of the current span."""
        v = self.reduce(vec)
        if not v:
            return False
        pivot = min(v, key=_sort_key)
        self.rows[pivot] = v
        return True

    def contains(self, vec: Mapping[Key, int | Fraction]) -> bool:
        return not self.reduce(vec)


def _sort_key(k: Key) -> tuple:
    return (repr(type(k)), repr(k))


def rank(vectors: Iterable[Mapping[Key, int | Fraction]]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def span_contains(basis: Iterable[Mapping], vectors: Iterable[Mapping]) -> bool:
    """True iff every vector in ``vectors`` lies in the span of ``basis``."""
    ech = Echelon()
    for v in basis:
        ech.add(v)
    return all(ech.contains(v) for v in vectors)


def kernel(columns: Mapping[Key, Mapping[Key, int | Fraction]]) -> list[dict[Key, int]]:
    """Basis of the kernel of the linear map sending basis vector ``j`` to ``columns[j]``.

    Returned kernel vectors are primitive integer combinations of the column keys.
    """
    # reduce [image | combination] jointly; an image that reduces to zero
    # leaves its tracked combination as a kernel vector
    pivots: dict[Key, tuple[dict, dict]] = {}
    basis: list[dict[Key, int]] = []
    for j, image in columns.items():
        den = 1
        for c in image.values():
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        img = {k: int(c * den) for k, c in image.items() if c}
        comb = {j: den}
        while img:
            hit = next((k for k in img if k in pivots), None)
            if hit is None:
                break
            prow, pcomb = pivots[hit]
            p, c = prow[hit], img[hit]
            g = gcd(p, c)
            img = _combine(p // g, img, c // g, prow)
            comb = _combine(p // g, comb, c // g, pcomb)
            img, comb = _joint_primitive(img, comb)
        if img:
            pivots[min(img, key=_sort_key)] = (img, comb)
        else:
            basis.append(_primitive(comb))
    return basis


def _joint_primitive(u: dict, v: dict) -> tuple[dict, dict]:
    g = 0
    for c in u.values():
        g = gcd(g, c)
    for c in v.values():
        g = gcd(g, c)
    if g > 1:
        return {k: c // g for k, c in u.items()}, {k: c // g for k, c in v.items()}
    return u, v
