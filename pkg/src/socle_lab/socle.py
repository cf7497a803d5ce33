"""Socle layers and Jordan-Hoelder data of indecomposable injectives.

A semisimple decomposition is a dict ``(lam', mu') -> multiplicity`` with all
multiplicities positive. Layers of I^{lam,mu} in the category with ``r``
blocks are

    layer_k = sum over gamma_1..gamma_r with total size k of
              N^lam_{gamma.., lam'} N^mu_{gamma.., mu'} (lam', mu').
"""

from __future__ import annotations

from collections import defaultdict
from typing import Sequence

from .errors import DomainError
from .partitions import (
    Partition,
    intersection,
    lr_coeff,
    partition,
    partition_tuples,
    partitions_of,
    skew_expand,
    sym_group_dim,
)

Pair = tuple[Partition, Partition]
SemisimpleDecomp = dict[Pair, int]

ALLOW_DEGENERATE = False


def _check_blocks(r: int) -> None:
    if r < 1:
        raise DomainError(f"number of blocks must be positive, got {r}")


def _accumulate(lam: Partition, mu: Partition, gammas: tuple[Partition, ...],
                out: dict[Pair, int]) -> None:
    left = skew_expand(lam, gammas)
    if not left:
        return
    right = skew_expand(mu, gammas)
    for lp, a in left.items():
        for mp, b in right.items():
            out[(lp, mp)] += a * b


def socle_layer_injective(lam: Sequence[int], mu: Sequence[int], r: int, k: int) -> SemisimpleDecomp:
    _check_blocks(r)
    lam, mu = partition(lam), partition(mu)
    out: dict[Pair, int] = defaultdict(int)
    if k < 0 or k > min(sum(lam), sum(mu)):
        return {}
    # every gamma_i must fit inside both diagrams
    inside = intersection(lam, mu)
    for gammas in partition_tuples(k, r, inside):
        _accumulate(lam, mu, gammas, out)
    return {p: c for p, c in out.items() if c}


def socle_layers_injective(lam: Sequence[int], mu: Sequence[int], r: int) -> list[SemisimpleDecomp]:
    """All layers from k = 0 through the last nonempty one."""
    lam, mu = partition(lam), partition(mu)
    layers = [socle_layer_injective(lam, mu, r, k) for k in range(min(sum(lam), sum(mu)) + 1)]
    while layers and not layers[-1]:
        layers.pop()
    return layers


def jh_injective(lam: Sequence[int], mu: Sequence[int], r: int) -> SemisimpleDecomp:
    """Jordan-Hoelder multiplicities of I^{lam,mu}; the gamma sizes are unconstrained."""
    _check_blocks(r)
    lam, mu = partition(lam), partition(mu)
    inside = intersection(lam, mu)
    out: dict[Pair, int] = defaultdict(int)
    # each gamma_i fits in lam cap mu, but their total only needs to fit in both sizes
    for total in range(min(sum(lam), sum(mu)) + 1):
        for gammas in partition_tuples(total, r, inside):
            _accumulate(lam, mu, gammas, out)
    return {p: c for p, c in out.items() if c}


def branching_matrix_entry(lam: Sequence[int], mu: Sequence[int],
                           lam_p: Sequence[int], mu_p: Sequence[int]) -> int:
    """A^{lam,mu}_{lam',mu'} = sum over gamma of N^lam_{lam',gamma} N^mu_{mu',gamma}."""
    lam, mu, lam_p, mu_p = map(partition, (lam, mu, lam_p, mu_p))
    d = sum(lam) - sum(lam_p)
    if d < 0 or d != sum(mu) - sum(mu_p):
        return 0
    return sum(lr_coeff(lam, lam_p, g) * lr_coeff(mu, mu_p, g) for g in partitions_of(d))


def _check_mn(m: int, n: int, allow_degenerate: bool | None) -> None:
    if allow_degenerate is None:
        allow_degenerate = ALLOW_DEGENERATE
    low = 0 if allow_degenerate else 1
    if m < low or n < low:
        raise DomainError(f"gl({m}|{n}) needs m, n >= {low}")


def socle_layers_K(m: int, n: int, allow_degenerate: bool | None = None) -> list[SemisimpleDecomp]:
    _check_mn(m, n, allow_degenerate)
    layers: list[dict[Pair, int]] = []
    for lam in partitions_of(m):
        for mu in partitions_of(n):
            weight = sym_group_dim(lam) * sym_group_dim(mu)
            for k, layer in enumerate(socle_layers_injective(lam, mu, 2)):
                while len(layers) <= k:
                    layers.append(defaultdict(int))
                for pair, c in layer.items():
                    layers[k][pair] += weight * c
    return [dict(layer) for layer in layers]


def column(k: int) -> Partition:
    return (1,) * k


def socle_layers_J(m: int, n: int, allow_degenerate: bool | None = None) -> list[SemisimpleDecomp]:
    """Closed form: layer i is (i + 1) copies of (column(m - i), column(n - i))."""
    _check_mn(m, n, allow_degenerate)
    return [{(column(m - i), column(n - i)): i + 1} for i in range(min(m, n) + 1)]


def layers_to_json(layers: list[SemisimpleDecomp]) -> list[dict]:
    return [
        {
            "k": k,
            "summands": [
                {"lambda": list(lp), "mu": list(mp), "mult": c}
                for (lp, mp), c in sorted(layer.items(), key=lambda item: (-sum(item[0][0]), item[0]))
            ],
        }
        for k, layer in enumerate(layers)
    ]


def decomp_to_json(decomp: SemisimpleDecomp) -> list[dict]:
    return [{"lambda": list(lp), "mu": list(mp), "mult": c}
            for (lp, mp), c in sorted(decomp.items(), key=lambda item: (-sum(item[0][0]), item[0]))]
