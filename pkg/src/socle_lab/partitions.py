"""Young diagram combinatorics.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the empty diagram. Everything here is exact integer
arithmetic.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]

EMPTY: Partition = ()


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return the canonical tuple (trailing zeros dropped)."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1"``; ``"-"`` (or an empty string) is the empty partition."""
    text = text.strip()
    if text in ("-", ""):
        return EMPTY
    try:
        return partition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}: {exc}") from None


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(map(str, lam)) if lam else "-"


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return EMPTY
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff the diagram of ``mu`` sits inside the diagram of ``lam``."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


def intersection(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    return partition(min(a, b) for a, b in zip(lam, mu))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def subdiagrams(lam: Partition, n: int | None = None) -> tuple[Partition, ...]:
    """Partitions contained in ``lam``, optionally only those of size ``n``."""
    out = []

    def rec(i: int, bound: int, acc: list[int], total: int) -> None:
        if i == len(lam) or bound == 0:
            if n is None or total == n:
                out.append(partition(acc))
            return
        for p in range(min(lam[i], bound), -1, -1):
            if n is not None and total + p > n:
                continue
            acc.append(p)
            rec(i + 1, p, acc, total + p)
            acc.pop()

    rec(0, lam[0] if lam else 0, [], 0)
    return tuple(out)


def hook_lengths(lam: Sequence[int]) -> list[list[int]]:
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def sym_group_dim(lam: Sequence[int]) -> int:
    """Dimension of the irreducible symmetric-group module indexed by ``lam``."""
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    return factorial(sum(lam)) // prod


# -- Littlewood-Richardson coefficients -------------------------------------------


def lr_coeff(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """The Littlewood-Richardson coefficient N^lam_{mu,nu}."""
    return _lr(partition(lam), partition(mu), partition(nu))


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if not contains(lam, mu) or not contains(lam, nu):
        return 0
    # fewer letters means fewer strips to place
    if len(mu) < len(nu):
        mu, nu = nu, mu
    if not nu:
        return 1
    start = mu + (0,) * (len(lam) - len(mu))
    return _place_strips(lam, start, nu, 0, (0,) * len(lam))


@lru_cache(maxsize=None)
def _place_strips(lam: Partition, shape: tuple[int, ...], content: Partition,
                  letter: int, prev: tuple[int, ...]) -> int:
    """Count ways to add horizontal strips for letters ``letter..`` with the lattice condition.

    ``prev`` holds the per-row counts of the previous letter; the count of the
    current letter in rows 0..r may not exceed the previous letter's count in
    rows 0..r-1.
    """
    if letter == len(content):
        return 1 if shape == lam else 0
    need = content[letter]
    rows = len(lam)
    total = 0
    counts = [0] * rows

    def rec(r: int, left: int, placed: int, prev_before: int) -> None:
        nonlocal total
        if left == 0:
            new_shape = tuple(shape[i] + counts[i] for i in range(rows))
            total += _place_strips(lam, new_shape, content, letter + 1, tuple(counts))
            return
        if r == rows:
            return
        cap = lam[r] if r == 0 else min(lam[r], shape[r - 1])
        room = cap - shape[r]
        if letter > 0:
            room = min(room, prev_before - placed)
        for c in range(min(room, left), -1, -1):
            counts[r] = c
            rec(r + 1, left - c, placed + c, prev_before + prev[r])
        counts[r] = 0

    rec(0, need, 0, 0)
    return total


def lr_coeff_oracle(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Brute-force LR count: list every semistandard filling of lam/mu with content nu,
    then keep those whose reverse reading word is a lattice word."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu):
        return 0
    mu_pad = mu + (0,) * (len(lam) - len(mu))
    cells = [(i, j) for i in range(len(lam)) for j in range(mu_pad[i], lam[i])]
    reading = [(i, j) for i in range(len(lam)) for j in reversed(range(mu_pad[i], lam[i]))]
    budget = list(nu)
    tab: dict[tuple[int, int], int] = {}
    count = 0

    def is_lattice() -> bool:
        seen = [0] * (len(nu) + 1)
        for cell in reading:
            v = tab[cell]
            seen[v] += 1
            if v > 1 and seen[v] > seen[v - 1]:
                return False
        return True

    def rec(idx: int) -> None:
        nonlocal count
        if idx == len(cells):
            if is_lattice():
                count += 1
            return
        i, j = cells[idx]
        lo = 1
        if (i, j - 1) in tab:
            lo = max(lo, tab[(i, j - 1)])
        if (i - 1, j) in tab:
            lo = max(lo, tab[(i - 1, j)] + 1)
        for v in range(lo, len(nu) + 1):
            if budget[v - 1] == 0:
                continue
            budget[v - 1] -= 1
            tab[(i, j)] = v
            rec(idx + 1)
            del tab[(i, j)]
            budget[v - 1] += 1

    rec(0)
    return count


def skew_expand(lam: Sequence[int], gammas: Sequence[Sequence[int]]) -> dict[Partition, int]:
    """Map lam' -> N^lam_{gamma_1,...,gamma_r,lam'} (iterated LR expansion)."""
    return dict(_skew_expand(partition(lam), tuple(partition(g) for g in gammas)))


@lru_cache(maxsize=None)
def _skew_expand(lam: Partition, gammas: tuple[Partition, ...]) -> tuple[tuple[Partition, int], ...]:
    current = {lam: 1}
    for g in gammas:
        nxt: dict[Partition, int] = {}
        for kappa, c in current.items():
            if not contains(kappa, g):
                continue
            for sub in subdiagrams(kappa, sum(kappa) - sum(g)):
                coeff = _lr(kappa, g, sub)
                if coeff:
                    nxt[sub] = nxt.get(sub, 0) + c * coeff
        current = nxt
    return tuple(sorted(current.items()))


def multi_lr(lam: Sequence[int], gammas: Sequence[Sequence[int]], lam_prime: Sequence[int]) -> int:
    """Multiplicity of S_gamma_1 x ... x S_gamma_r x S_lam' in the iterated expansion of lam."""
    return skew_expand(lam, gammas).get(partition(lam_prime), 0)


def partition_tuples(total: int, r: int, inside: Partition | None = None) -> Iterator[tuple[Partition, ...]]:
    """All r-tuples of partitions with sizes summing to ``total``, each inside ``inside`` if given."""
    if r == 0:
        if total == 0:
            yield ()
        return
    for first_size in range(total + 1):
        if inside is None:
            firsts: Iterable[Partition] = partitions_of(first_size)
        else:
            firsts = subdiagrams(inside, first_size)
        for first in firsts:
            for rest in partition_tuples(total - first_size, r - 1, inside):
                yield (first,) + rest

