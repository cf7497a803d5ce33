"""Euler characteristic of the derived Zuckerman functor on Verma classes.

gamma(m_lambda) = sum over s in S_m x S_n of sgn(s) m_{s.lambda}, with the dot
action s.lambda = s(lambda + rho) - rho.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from math import factorial

from .errors import DomainError
from .fock import (
    VERMA,
    GrothVec,
    Perm,
    Weight,
    bar,
    group_elements,
    pair_sign,
    rho,
    unbar,
)

DottedPermutation = tuple[Perm, Perm]


def _permute(p: Perm, seq: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(seq)
    for i, x in enumerate(seq):
        out[p[i]] = x
    return tuple(out)


def dot_action(s: DottedPermutation, lam: Weight) -> Weight:
    """s.lambda = s(lambda + rho) - rho, computed on the weight itself."""
    r = rho(lam.m, lam.n)
    shifted_even = tuple(x + y for x, y in zip(lam.even, r.even))
    shifted_odd = tuple(x + y for x, y in zip(lam.odd, r.odd))
    even = tuple(x - y for x, y in zip(_permute(s[0], shifted_even), r.even))
    odd = tuple(x - y for x, y in zip(_permute(s[1], shifted_odd), r.odd))
    return Weight(even, odd)


def is_singular(lam: Weight) -> bool:
    """True iff lambda + rho has a repeated entry inside the even or odd block."""
    label = bar(lam)
    return len(set(label.a)) < len(label.a) or len(set(label.b)) < len(label.b)


def gamma(v: GrothVec) -> GrothVec:
    if v.kind != VERMA:
        raise DomainError("gamma acts on Verma-basis vectors")
    out: dict = defaultdict(Fraction)
    elements = list(group_elements(v.m, v.n))
    for label, c in v.items():
        lam = unbar(label)
        for s in elements:
            out[bar(dot_action(s, lam))] += pair_sign(s) * c
    return GrothVec(VERMA, v.m, v.n, out)


def wedge_projector(v: GrothVec) -> GrothVec:
    """gamma / (m! n!): the idempotent onto the image of the Kac embedding."""
    return gamma(v) / (factorial(v.m) * factorial(v.n))
