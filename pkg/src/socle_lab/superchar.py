"""Supercharacters: supersymmetric Laurent polynomials in x_1..x_m, y_1..y_n.

Odd weight spaces contribute with a minus sign, so y-variables enter negated
relative to the plain hook Schur function; ``ds`` is then the substitution
x_m = y_n = t followed by checking that t drops out.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator, Mapping, Sequence

from .errors import DomainError, NotSupersymmetric
from .fock import Weight, bar, is_dominant
from .partitions import Partition, partition, partitions_of

Monomial = tuple[tuple[int, ...], tuple[int, ...]]


class SuperPoly:
    """Laurent polynomial with integer coefficients; immutable."""

    __slots__ = ("m", "n", "_terms")

    def __init__(self, m: int, n: int, terms: Mapping[Monomial, int] | None = None):
        self.m = m
        self.n = n
        clean: dict[Monomial, int] = {}
        for (xe, ye), c in (terms or {}).items():
            xe, ye = tuple(xe), tuple(ye)
            if len(xe) != m or len(ye) != n:
                raise ValueError(f"monomial {(xe, ye)} does not have shape ({m}|{n})")
            if c:
                clean[(xe, ye)] = clean.get((xe, ye), 0) + int(c)
        self._terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def one(cls, m: int, n: int) -> "SuperPoly":
        return cls(m, n, {((0,) * m, (0,) * n): 1})

    @classmethod
    def x(cls, m: int, n: int, i: int, power: int = 1) -> "SuperPoly":
        e = [0] * m
        e[i] = power
        return cls(m, n, {(tuple(e), (0,) * n): 1})

    @classmethod
    def y(cls, m: int, n: int, j: int, power: int = 1) -> "SuperPoly":
        e = [0] * n
        e[j] = power
        return cls(m, n, {((0,) * m, tuple(e)): 1})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _same_ring(self, other: "SuperPoly") -> None:
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError(f"ring mismatch ({self.m}|{self.n}) vs ({other.m}|{other.n})")

    def __add__(self, other: "SuperPoly") -> "SuperPoly":
        self._same_ring(other)
        acc = dict(self._terms)
        for k, c in other.items():
            acc[k] = acc.get(k, 0) + c
        return SuperPoly(self.m, self.n, acc)

    def __neg__(self) -> "SuperPoly":
        return SuperPoly(self.m, self.n, {k: -c for k, c in self.items()})

    def __sub__(self, other: "SuperPoly") -> "SuperPoly":
        return self + (-other)

    def __mul__(self, other: "SuperPoly | int") -> "SuperPoly":
        if isinstance(other, int):
            return SuperPoly(self.m, self.n, {k: c * other for k, c in self.items()})
        self._same_ring(other)
        acc: dict[Monomial, int] = defaultdict(int)
        for (xa, ya), ca in self.items():
            for (xb, yb), cb in other.items():
                key = (tuple(p + q for p, q in zip(xa, xb)), tuple(p + q for p, q in zip(ya, yb)))
                acc[key] += ca * cb
        return SuperPoly(self.m, self.n, acc)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperPoly):
            return NotImplemented
        return (self.m, self.n, self._terms) == (other.m, other.n, other._terms)

    def __hash__(self) -> int:
        return hash((self.m, self.n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"SuperPoly({self.m}|{self.n}: {format_poly(self)})"


def format_poly(f: SuperPoly) -> str:
    if not f:
        return "0"
    parts = []
    for (xe, ye), c in sorted(f.items(), reverse=True):
        factors = [_var("x", i, e) for i, e in enumerate(xe) if e]
        factors += [_var("y", j, e) for j, e in enumerate(ye) if e]
        mono = "*".join(factors)
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def _var(name: str, i: int, e: int) -> str:
    return f"{name}{i + 1}" if e == 1 else f"{name}{i + 1}^{e}"


# -- Schur and super Schur functions ----------------------------------------------


def _ssyt_fillings(shape: Partition, letters: int) -> Iterator[dict[tuple[int, int], int]]:
    cells = [(i, j) for i in range(len(shape)) for j in range(shape[i])]
    tab: dict[tuple[int, int], int] = {}

    def rec(idx: int):
        if idx == len(cells):
            yield dict(tab)
            return
        i, j = cells[idx]
        lo = 0
        if j > 0:
            lo = max(lo, tab[(i, j - 1)])
        if i > 0:
            lo = max(lo, tab[(i - 1, j)] + 1)
        for v in range(lo, letters):
            tab[(i, j)] = v
            yield from rec(idx + 1)
        tab.pop((i, j), None)

    yield from rec(0)


@lru_cache(maxsize=None)
def schur_exponents(shape: tuple[int, ...], k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Schur polynomial of an integer dominant weight in k variables, as (exponent, coeff) pairs."""
    if len(shape) != k:
        raise ValueError("shape length must equal number of variables")
    if k == 0:
        return (((), 1),)
    shift = shape[-1]
    base = partition(p - shift for p in shape)
    acc: dict[tuple[int, ...], int] = defaultdict(int)
    for tab in _ssyt_fillings(base, k):
        e = [shift] * k
        for v in tab.values():
            e[v] += 1
        acc[tuple(e)] += 1
    return tuple(sorted(acc.items()))


def super_schur(lam: Sequence[int], m: int, n: int) -> SuperPoly:
    """Supercharacter of S_lam of the natural gl(m|n)-module.

    Sum over (m|n)-semistandard hook tableaux: unprimed letters 1..m weakly
    increase along rows and strictly down columns, primed letters 1'..n'
    (all larger) strictly along rows and weakly down columns; each primed
    letter contributes -y.
    """
    lam = partition(lam)
    if len(lam) > m and lam[m] > n:
        return SuperPoly(m, n)
    cells = [(i, j) for i in range(len(lam)) for j in range(lam[i])]
    tab: dict[tuple[int, int], int] = {}
    acc: dict[Monomial, int] = defaultdict(int)
    total = m + n

    def ok(i: int, j: int, v: int) -> bool:
        left = tab.get((i, j - 1))
        up = tab.get((i - 1, j))
        primed = v >= m
        if left is not None:
            if left > v or (primed and left == v):
                return False
        if up is not None:
            if up > v or (not primed and up == v):
                return False
        return True

    def rec(idx: int) -> None:
        if idx == len(cells):
            xe = [0] * m
            ye = [0] * n
            sign = 1
            for v in tab.values():
                if v < m:
                    xe[v] += 1
                else:
                    ye[v - m] += 1
                    sign = -sign
            acc[(tuple(xe), tuple(ye))] += sign
            return
        i, j = cells[idx]
        for v in range(total):
            if ok(i, j, v):
                tab[(i, j)] = v
                rec(idx + 1)
        tab.pop((i, j), None)

    rec(0)
    return SuperPoly(m, n, acc)


@lru_cache(maxsize=None)
def _kac_factor(m: int, n: int) -> SuperPoly:
    """prod over i, j of (1 - y_j / x_i)."""
    f = SuperPoly.one(m, n)
    for i in range(m):
        for j in range(n):
            xe = [0] * m
            xe[i] = -1
            ye = [0] * n
            ye[j] = 1
            f = f * SuperPoly(m, n, {((0,) * m, (0,) * n): 1, (tuple(xe), tuple(ye)): -1})
    return f


def kac_supercharacter(lam: Weight, m: int | None = None, n: int | None = None) -> SuperPoly:
    """s_even(x) * s_odd(y) * prod (1 - y_j/x_i) for a dominant weight."""
    m = lam.m if m is None else m
    n = lam.n if n is None else n
    if (lam.m, lam.n) != (m, n):
        raise DomainError(f"weight {lam} does not belong to gl({m}|{n})")
    if not is_dominant(bar(lam)):
        raise DomainError(f"weight {lam} is not dominant")
    even = {(xe, (0,) * n): c for xe, c in schur_exponents(lam.even, m)}
    odd = {((0,) * m, ye): c for ye, c in schur_exponents(lam.odd, n)}
    return SuperPoly(m, n, even) * SuperPoly(m, n, odd) * _kac_factor(m, n)


# -- symmetry and the ds evaluation --------------------------------------------------


def _is_symmetric(f: SuperPoly, side: int) -> bool:
    k = f.m if side == 0 else f.n
    for p in range(k - 1):
        swapped = {}
        for mono, c in f.items():
            e = list(mono[side])
            e[p], e[p + 1] = e[p + 1], e[p]
            key = (tuple(e), mono[1]) if side == 0 else (mono[0], tuple(e))
            swapped[key] = c
        if swapped != f.terms:
            return False
    return True


def substitute_pair(f: SuperPoly, i: int, j: int) -> dict[int, SuperPoly]:
    """Set x_i = y_j = t (0-based); return t-degree -> coefficient polynomial."""
    if not (0 <= i < f.m and 0 <= j < f.n):
        raise DomainError(f"pair ({i + 1},{j + 1}) out of range for ({f.m}|{f.n})")
    by_degree: dict[int, dict[Monomial, int]] = defaultdict(lambda: defaultdict(int))
    for (xe, ye), c in f.items():
        deg = xe[i] + ye[j]
        key = (xe[:i] + xe[i + 1:], ye[:j] + ye[j + 1:])
        by_degree[deg][key] += c
    out = {}
    for deg, terms in by_degree.items():
        poly = SuperPoly(f.m - 1, f.n - 1, terms)
        if poly:
            out[deg] = poly
    return out


def _cancels(f: SuperPoly) -> bool:
    if f.m == 0 or f.n == 0:
        return True
    return set(substitute_pair(f, f.m - 1, f.n - 1)) <= {0}


def is_supersymmetric(f: SuperPoly) -> bool:
    return _is_symmetric(f, 0) and _is_symmetric(f, 1) and _cancels(f)


def ds_eval(f: SuperPoly) -> SuperPoly:
    """Substitute x_m = y_n = t; the result must not depend on t."""
    if f.m < 1 or f.n < 1:
        raise DomainError("ds needs m, n >= 1")
    pieces = substitute_pair(f, f.m - 1, f.n - 1)
    if set(pieces) - {0}:
        raise NotSupersymmetric("t survives the substitution; input is not a supercharacter")
    return pieces.get(0, SuperPoly(f.m - 1, f.n - 1))


def ds_power(f: SuperPoly, k: int) -> SuperPoly:
    if k < 0 or k > min(f.m, f.n):
        raise DomainError(f"ds^{k} undefined on ({f.m}|{f.n})")
    for _ in range(k):
        f = ds_eval(f)
    return f


def pair_independence_check(f: SuperPoly, i: int, j: int) -> bool:
    """Evaluating on the pair (x_i, y_j) (1-based) agrees with the canonical ds."""
    if not is_supersymmetric(f):
        raise NotSupersymmetric("pair independence is only meaningful on supersymmetric input")
    pieces = substitute_pair(f, i - 1, j - 1)
    if set(pieces) - {0}:
        return False
    return pieces.get(0, SuperPoly(f.m - 1, f.n - 1)) == ds_eval(f)


def dominant_weights(m: int, n: int, lo: int, hi: int) -> Iterator[Weight]:
    """Dominant weights with every entry in [lo, hi]."""
    for even in product(range(hi, lo - 1, -1), repeat=m):
        if any(even[i] < even[i + 1] for i in range(m - 1)):
            continue
        for odd in product(range(hi, lo - 1, -1), repeat=n):
            if any(odd[i] < odd[i + 1] for i in range(n - 1)):
                continue
            yield Weight(even, odd)


@dataclass
class ShadowReport:
    m: int
    n: int
    degree: int
    checks: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)


def tensor_filtration_shadow(m: int, n: int, degree: int) -> ShadowReport:
    """ds kills Kac supercharacters and sends s_lam^{(m|n)} to s_lam^{(m-1|n-1)}.

    Kac weights checked: dominant weights whose entries have absolute values
    summing to less than ``degree``.
    """
    if m < 1 or n < 1:
        raise DomainError("the tensor filtration shadow needs m, n >= 1")

    report = ShadowReport(m, n, degree)
    for d in range(degree + 1):
        for lam in partitions_of(d):
            ok = ds_eval(super_schur(lam, m, n)) == super_schur(lam, m - 1, n - 1)
            report.checks.append((f"ds s_{list(lam)} = s_{list(lam)}^({m - 1}|{n - 1})", ok))
    bound = max(degree - 1, 0)
    for lam in dominant_weights(m, n, -bound, bound):
        if sum(abs(x) for x in lam.even + lam.odd) >= degree:
            continue
        ok = not ds_eval(kac_supercharacter(lam))
        report.checks.append((f"ds sch K({lam}) = 0", ok))
    return report


def poly_to_json(f: SuperPoly) -> dict:
    return {
        "m": f.m,
        "n": f.n,
        "terms": [{"x": list(xe), "y": list(ye), "c": str(c)} for (xe, ye), c in sorted(f.items())],
    }


def poly_from_json(data: Mapping) -> SuperPoly:
    m, n = int(data["m"]), int(data["n"])
    terms: dict[Monomial, int] = defaultdict(int)
    for t in data["terms"]:
        terms[(tuple(int(e) for e in t["x"]), tuple(int(e) for e in t["y"]))] += int(str(t["c"]))
    return SuperPoly(m, n, terms)
