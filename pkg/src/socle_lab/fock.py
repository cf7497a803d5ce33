"""Grothendieck-group model of integral category O for gl(m|n).

A Verma class [M(lambda)] is the pure tensor
``v_{a_1} x ... x v_{a_m} x v*_{b_1} x ... x v*_{b_n}`` where ``(a | b)`` is the
bar label of lambda: ``a = even part + rho_even`` and ``b = -(odd part + rho_odd)``.
A Kac class [K(lambda)] is the corresponding wedge with ``a`` strictly
decreasing and ``b`` strictly increasing.

The Chevalley operators e_i, f_i act for every integer i; nothing is
truncated. Finite windows of indices are used only for kernel computations.
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Iterator, Mapping, Sequence

from . import linalg
from .errors import DomainError, WindowTooLarge

VERMA = "verma"
KAC = "kac"

DEFAULT_MAX_WINDOW = 32


@dataclass(frozen=True, order=True)
class Weight:
    even: tuple[int, ...]
    odd: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "even", tuple(int(x) for x in self.even))
        object.__setattr__(self, "odd", tuple(int(x) for x in self.odd))

    @property
    def m(self) -> int:
        return len(self.even)

    @property
    def n(self) -> int:
        return len(self.odd)

    def __str__(self) -> str:
        return format_weight(self)


@dataclass(frozen=True, order=True)
class BarLabel:
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))

    @property
    def m(self) -> int:
        return len(self.a)

    @property
    def n(self) -> int:
        return len(self.b)

    def entries(self) -> tuple[int, ...]:
        return self.a + self.b


def parse_weight(text: str) -> Weight:
    """Parse ``"a1,...,am|b1,...,bn"``; either side may be empty."""
    if text.count("|") != 1:
        raise ValueError(f"malformed weight {text!r}: expected exactly one '|'")
    left, right = text.split("|")
    try:
        even = tuple(int(x) for x in left.split(",")) if left.strip() else ()
        odd = tuple(int(x) for x in right.split(",")) if right.strip() else ()
    except ValueError:
        raise ValueError(f"malformed weight {text!r}") from None
    return Weight(even, odd)


def format_weight(lam: Weight) -> str:
    return ",".join(map(str, lam.even)) + "|" + ",".join(map(str, lam.odd))


def rho(m: int, n: int) -> Weight:
    return Weight(tuple(range(m - 1, -1, -1)), tuple(range(0, -n, -1)))


def bar(lam: Weight) -> BarLabel:
    r = rho(lam.m, lam.n)
    a = tuple(x + y for x, y in zip(lam.even, r.even))
    b = tuple(-(x + y) for x, y in zip(lam.odd, r.odd))
    return BarLabel(a, b)


def unbar(label: BarLabel) -> Weight:
    r = rho(label.m, label.n)
    even = tuple(x - y for x, y in zip(label.a, r.even))
    odd = tuple(-x - y for x, y in zip(label.b, r.odd))
    return Weight(even, odd)


def supp_multiset(lam: Weight) -> tuple[int, ...]:
    """The multiset {bar_1..bar_m, -bar_{m+1}..-bar_{m+n}}, returned sorted."""
    return tuple(sorted(bar(lam).entries()))


def atypicality(lam: Weight | BarLabel) -> int:
    """Number of matched pairs a_i = b_j (multiset intersection size)."""
    label = lam if isinstance(lam, BarLabel) else bar(lam)
    pool = defaultdict(int)
    for x in label.a:
        pool[x] += 1
    hits = 0
    for y in label.b:
        if pool[y]:
            pool[y] -= 1
            hits += 1
    return hits


def is_dominant(lam: Weight | BarLabel) -> bool:
    label = lam if isinstance(lam, BarLabel) else bar(lam)
    a, b = label.a, label.b
    return all(a[i] > a[i + 1] for i in range(len(a) - 1)) and all(
        b[j] < b[j + 1] for j in range(len(b) - 1)
    )


def _sort_sign(seq: Sequence[int], reverse: bool) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation and the sorted tuple; sign 0 on a repeat."""
    seq = list(seq)
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(seq)):
        j = i
        while j > 0 and ((seq[j - 1] < seq[j]) if reverse else (seq[j - 1] > seq[j])):
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    if any(seq[i] == seq[i + 1] for i in range(len(seq) - 1)):
        return 0, tuple(seq)
    return sign, tuple(seq)


def canonical_wedge(a: Sequence[int], b: Sequence[int]) -> tuple[int, BarLabel]:
    """Rewrite the wedge v_a1^..^v_am x v*_b1^..^v*_bn in canonical order."""
    sa, a_sorted = _sort_sign(a, reverse=True)
    sb, b_sorted = _sort_sign(b, reverse=False)
    return sa * sb, BarLabel(a_sorted, b_sorted)


class GrothVec:
    """Finitely supported rational combination of Verma or Kac classes.

    Values are immutable; arithmetic returns new vectors. Zero coefficients
    are never stored and Kac labels are always canonical.
    """

    __slots__ = ("kind", "m", "n", "_terms")

    def __init__(self, kind: str, m: int, n: int,
                 terms: Mapping[BarLabel, int | Fraction] | Iterable[tuple[BarLabel, int | Fraction]] = ()):
        if kind not in (VERMA, KAC):
            raise ValueError(f"unknown basis kind {kind!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[BarLabel, Fraction] = {}
        for label, c in items:
            if label.m != m or label.n != n:
                raise ValueError(f"label {label} does not fit gl({m}|{n})")
            if kind == KAC and not is_dominant(label):
                raise DomainError(f"Kac label {label} is not dominant")
            acc[label] = acc.get(label, Fraction(0)) + Fraction(c)
        self.kind = kind
        self.m = m
        self.n = n
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def basis(cls, kind: str, label: BarLabel) -> "GrothVec":
        return cls(kind, label.m, label.n, {label: 1})

    @classmethod
    def verma(cls, lam: Weight) -> "GrothVec":
        """m_lambda."""
        return cls.basis(VERMA, bar(lam))

    @classmethod
    def kac(cls, lam: Weight) -> "GrothVec":
        """k_lambda; lambda must be dominant."""
        label = bar(lam)
        if not is_dominant(label):
            raise DomainError(f"{format_weight(lam)} is not dominant")
        return cls.basis(KAC, label)

    @classmethod
    def wedge(cls, a: Sequence[int], b: Sequence[int]) -> "GrothVec":
        """The (possibly non-canonical) wedge, rewritten canonically."""
        sign, label = canonical_wedge(a, b)
        return cls(KAC, len(a), len(b), {label: sign} if sign else {})

    @classmethod
    def zero(cls, kind: str, m: int, n: int) -> "GrothVec":
        return cls(kind, m, n)

    @property
    def terms(self) -> dict[BarLabel, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator[BarLabel]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, label: BarLabel) -> Fraction:
        return self._terms.get(label, Fraction(0))

    def _check(self, other: "GrothVec") -> None:
        if not isinstance(other, GrothVec):
            raise TypeError(f"cannot combine GrothVec with {type(other).__name__}")
        if (self.kind, self.m, self.n) != (other.kind, other.m, other.n):
            raise DomainError(
                f"basis mismatch: {self.kind} gl({self.m}|{self.n}) vs {other.kind} gl({other.m}|{other.n})"
            )

    def __add__(self, other: "GrothVec") -> "GrothVec":
        self._check(other)
        return GrothVec(self.kind, self.m, self.n, list(self.items()) + list(other.items()))

    def __sub__(self, other: "GrothVec") -> "GrothVec":
        return self + (-other)

    def __neg__(self) -> "GrothVec":
        return GrothVec(self.kind, self.m, self.n, {k: -v for k, v in self.items()})

    def __mul__(self, scalar: int | Fraction) -> "GrothVec":
        return GrothVec(self.kind, self.m, self.n, {k: v * scalar for k, v in self.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar: int | Fraction) -> "GrothVec":
        return self * (1 / Fraction(scalar))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrothVec):
            return NotImplemented
        return (self.kind, self.m, self.n, self._terms) == (other.kind, other.m, other.n, other._terms)

    def __hash__(self) -> int:
        return hash((self.kind, self.m, self.n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return f"GrothVec({self.kind}, {self.m}|{self.n}, 0)"
        body = " + ".join(f"{c}*{_fmt_label(k)}" for k, c in sorted(self._terms.items()))
        return f"GrothVec({self.kind}, {body})"


def _fmt_label(label: BarLabel) -> str:
    return "[" + ",".join(map(str, label.a)) + "|" + ",".join(map(str, label.b)) + "]"


# -- the sl(infinity) action ------------------------------------------------------


def _moves(label: BarLabel, i: int, raising: bool) -> Iterator[tuple[int, tuple[int, ...], tuple[int, ...]]]:
    """Single-position moves of e_i (raising) or f_i on a pure tensor.

    e_i = E_{i,i+1}: v_{i+1} -> v_i, v*_i -> -v*_{i+1}.
    f_i = F_{i+1,i}: v_i -> v_{i+1}, v*_{i+1} -> -v*_i.
    """
    src_a, dst_a = (i + 1, i) if raising else (i, i + 1)
    src_b, dst_b = (i, i + 1) if raising else (i + 1, i)
    a, b = label.a, label.b
    for p, x in enumerate(a):
        if x == src_a:
            yield 1, a[:p] + (dst_a,) + a[p + 1:], b
    for p, y in enumerate(b):
        if y == src_b:
            yield -1, a, b[:p] + (dst_b,) + b[p + 1:]


def _apply(i: int, v: GrothVec, raising: bool) -> GrothVec:
    out: dict[BarLabel, Fraction] = defaultdict(Fraction)
    for label, c in v.items():
        for sign, a, b in _moves(label, i, raising):
            if v.kind == VERMA:
                out[BarLabel(a, b)] += sign * c
            else:
                s, canon = canonical_wedge(a, b)
                if s:
                    out[canon] += sign * s * c
    return GrothVec(v.kind, v.m, v.n, out)


def apply_e(i: int, v: GrothVec) -> GrothVec:
    return _apply(i, v, raising=True)


def apply_f(i: int, v: GrothVec) -> GrothVec:
    return _apply(i, v, raising=False)


def weight_h(i: int, label: BarLabel) -> int:
    """Eigenvalue of h_i = [e_i, f_i] on a basis label."""
    return (label.a.count(i) - label.a.count(i + 1)
            - label.b.count(i) + label.b.count(i + 1))


def apply_h(i: int, v: GrothVec) -> GrothVec:
    return GrothVec(v.kind, v.m, v.n, {k: c * weight_h(i, k) for k, c in v.items()})


def annihilator_support(x: BarLabel | GrothVec) -> frozenset[int]:
    """Indices i with e_i x != 0 or f_i x != 0 (a finite set)."""
    v = x if isinstance(x, GrothVec) else GrothVec.basis(VERMA, x)
    candidates = {e for label in v for y in label.entries() for e in (y - 1, y)}
    return frozenset(i for i in candidates if apply_e(i, v) or apply_f(i, v))


# -- symmetric group, Kac embedding, contractions ---------------------------------


Perm = tuple[int, ...]


def perm_sign(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def compose(s: Perm, t: Perm) -> Perm:
    """(s o t)(i) = s(t(i))."""
    return tuple(s[t[i]] for i in range(len(t)))


def place(p: Perm, seq: Sequence[int]) -> tuple[int, ...]:
    """Move the entry at position i to position p(i)."""
    out = [0] * len(seq)
    for i, x in enumerate(seq):
        out[p[i]] = x
    return tuple(out)


def group_elements(m: int, n: int) -> Iterator[tuple[Perm, Perm]]:
    for s in permutations(range(m)):
        for t in permutations(range(n)):
            yield s, t


def pair_sign(s: tuple[Perm, Perm]) -> int:
    return perm_sign(s[0]) * perm_sign(s[1])


def sym_act(s: tuple[Perm, Perm], v: GrothVec) -> GrothVec:
    """Place permutation of tensor factors by (sigma, tau) in S_m x S_n."""
    if v.kind != VERMA:
        raise DomainError("sym_act needs a Verma-basis vector")
    sigma, tau = s
    return GrothVec(VERMA, v.m, v.n,
                    {BarLabel(place(sigma, k.a), place(tau, k.b)): c for k, c in v.items()})


def iota_kac(v: GrothVec) -> GrothVec:
    """Antisymmetrization embedding of the wedge space into the tensor space."""
    if v.kind != KAC:
        raise DomainError("iota_kac needs a Kac-basis vector")
    out: dict[BarLabel, Fraction] = defaultdict(Fraction)
    for label, c in v.items():
        for s in group_elements(v.m, v.n):
            out[BarLabel(place(s[0], label.a), place(s[1], label.b))] += pair_sign(s) * c
    return GrothVec(VERMA, v.m, v.n, out)


def contraction(i: int, j: int, v: GrothVec) -> GrothVec:
    """Pair the i-th V factor with the j-th V* factor (1-based)."""
    if v.kind != VERMA:
        raise DomainError("contraction needs a Verma-basis vector")
    if not (1 <= i <= v.m and 1 <= j <= v.n):
        raise DomainError(f"contraction index ({i},{j}) out of range for gl({v.m}|{v.n})")
    out: dict[BarLabel, Fraction] = defaultdict(Fraction)
    for label, c in v.items():
        if label.a[i - 1] == label.b[j - 1]:
            out[BarLabel(label.a[:i - 1] + label.a[i:], label.b[:j - 1] + label.b[j:])] += c
    return GrothVec(VERMA, v.m - 1, v.n - 1, out)


def _contract_label(label: BarLabel) -> dict[tuple[int, int, BarLabel], int]:
    """Image of a basis label under all stacked contractions, keyed by (i, j, target)."""
    out = {}
    for i, x in enumerate(label.a):
        for j, y in enumerate(label.b):
            if x == y:
                out[(i, j, BarLabel(label.a[:i] + label.a[i + 1:], label.b[:j] + label.b[j + 1:]))] = 1
    return out


# -- kernels on finite windows ----------------------------------------------------


def max_window() -> int:
    raw = os.environ.get("SOCLE_LAB_MAX_WINDOW")
    return int(raw) if raw else DEFAULT_MAX_WINDOW


def _check_window(lo: int, hi: int) -> None:
    if hi < lo:
        raise DomainError(f"empty window [{lo},{hi}]")
    width = hi - lo + 1
    if width > max_window():
        raise WindowTooLarge(f"window width {width} exceeds SOCLE_LAB_MAX_WINDOW={max_window()}")


def window_labels(m: int, n: int, lo: int, hi: int) -> Iterator[BarLabel]:
    rng = range(lo, hi + 1)
    for entries in product(rng, repeat=m + n):
        yield BarLabel(entries[:m], entries[m:])


def net_content(label: BarLabel) -> tuple[tuple[int, int], ...]:
    """Weight of a label: count of index x among a minus count among b, as sorted pairs."""
    c: dict[int, int] = defaultdict(int)
    for x in label.a:
        c[x] += 1
    for y in label.b:
        c[y] -= 1
    return tuple(sorted((k, v) for k, v in c.items() if v))


def _kernel_by_content(labels: Iterable[BarLabel]) -> list[dict[BarLabel, int]]:
    # contractions preserve the weight, so the kernel splits weight by weight
    groups: dict[tuple, list[BarLabel]] = defaultdict(list)
    for label in labels:
        groups[net_content(label)].append(label)
    basis = []
    for key in sorted(groups):
        cols = {label: _contract_label(label) for label in groups[key]}
        basis.extend(linalg.kernel(cols))
    return basis


def socle_T_window(m: int, n: int, lo: int, hi: int) -> list[GrothVec]:
    """Basis of the common kernel of all contractions on labels with entries in [lo, hi]."""
    _check_window(lo, hi)
    return [GrothVec(VERMA, m, n, vec) for vec in _kernel_by_content(window_labels(m, n, lo, hi))]


def socle_T_window_dim(m: int, n: int, lo: int, hi: int) -> int:
    _check_window(lo, hi)
    return len(_kernel_by_content(window_labels(m, n, lo, hi)))


# -- finite verification of the appendix inclusion ---------------------------------


@dataclass
class AppendixReport:
    m: int
    n: int
    lo: int
    hi: int
    split: int
    weights_checked: int
    socle_dim: int
    failures: list[tuple]

    @property
    def passed(self) -> bool:
        return not self.failures


def _apply_block_operator(x: int, y: int, label: BarLabel) -> dict[BarLabel, int]:
    """E_{x,y} (x != y) on a pure tensor: v_y -> v_x and v*_x -> -v*_y."""
    out: dict[BarLabel, int] = defaultdict(int)
    a, b = label.a, label.b
    for p, val in enumerate(a):
        if val == y:
            out[BarLabel(a[:p] + (x,) + a[p + 1:], b)] += 1
    for p, val in enumerate(b):
        if val == x:
            out[BarLabel(a, b[:p] + (y,) + b[p + 1:])] -= 1
    return {k: v for k, v in out.items() if v}


def appendix_inclusion_report(m: int, n: int, lo: int, hi: int, split: int) -> AppendixReport:
    """Check (socle of T) cap Y inside s.Y on the window [lo, hi].

    W1 = indices < split, W2 = indices >= split, s = traceless operators on W1,
    Y = span of labels with at least one entry in W1. Everything is graded by
    weight. On a weight whose W1 part is not constant some diagonal traceless
    operator acts by a nonzero scalar, so that whole weight space lies in s.Y;
    the remaining weights are checked by explicit elimination.
    """
    _check_window(lo, hi)
    if not (lo < split <= hi):
        raise DomainError(f"split point {split} does not cut [{lo},{hi}] into two nonempty parts")
    w1 = list(range(lo, split))

    def in_y(label: BarLabel) -> bool:
        return any(e < split for e in label.entries())

    groups: dict[tuple, list[BarLabel]] = defaultdict(list)
    for label in window_labels(m, n, lo, hi):
        if in_y(label):
            groups[net_content(label)].append(label)

    def w1_constant(content: tuple) -> bool:
        c = dict(content)
        return len({c.get(x, 0) for x in w1}) == 1

    failures = []
    checked = 0
    socle_dim = 0
    for content in sorted(groups):
        cols = {label: _contract_label(label) for label in groups[content]}
        socle_part = linalg.kernel(cols)
        socle_dim += len(socle_part)
        if not w1_constant(content) or not socle_part:
            continue
        checked += 1
        # s.Y in this weight: E_{x,y} applied to Y-labels of weight content - (e_x - e_y)
        target = dict(content)
        image = linalg.Echelon()
        for x in w1:
            for y in w1:
                if x == y:
                    continue
                src = dict(target)
                src[x] = src.get(x, 0) - 1
                src[y] = src.get(y, 0) + 1
                key = tuple(sorted((k, v) for k, v in src.items() if v))
                for label in groups.get(key, ()):
                    vec = _apply_block_operator(x, y, label)
                    if vec:
                        image.add(vec)
        for vec in socle_part:
            if not image.contains(vec):
                failures.append((content, vec))
    return AppendixReport(m, n, lo, hi, split, checked, socle_dim, failures)


def appendix_inclusion_check(m: int, n: int, lo: int, hi: int, split: int) -> bool:
    return appendix_inclusion_report(m, n, lo, hi, split).passed


# -- serialization ----------------------------------------------------------------


def vec_to_records(v: GrothVec) -> list[dict]:
    return [
        {"m": v.m, "n": v.n, "basis": v.kind, "a": list(k.a), "b": list(k.b), "coeff": str(c)}
        for k, c in sorted(v.items())
    ]


def vec_from_records(records: Iterable[Mapping]) -> GrothVec:
    records = list(records)
    if not records:
        raise DomainError("empty vector file: cannot infer basis and rank")
    kind, m, n = records[0]["basis"], int(records[0]["m"]), int(records[0]["n"])
    terms = []
    for rec in records:
        if (rec["basis"], int(rec["m"]), int(rec["n"])) != (kind, m, n):
            raise DomainError("basis-kind mismatch between terms")
        terms.append((BarLabel(rec["a"], rec["b"]), Fraction(str(rec["coeff"]))))
    return GrothVec(kind, m, n, terms)
