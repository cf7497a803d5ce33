from collections import Counter

import pytest

from socle_lab import socle
from socle_lab.errors import DomainError
from socle_lab.partitions import lr_coeff, partitions_of
from socle_lab.socle import (
    branching_matrix_entry,
    column,
    jh_injective,
    socle_layer_injective,
    socle_layers_injective,
    socle_layers_J,
    socle_layers_K,
)


def _fold(lam, gammas, lam_p):
    if not gammas:
        return int(lam == lam_p)
    d = sum(lam) - sum(gammas[0])
    if d < 0:
        return 0
    return sum(lr_coeff(lam, kappa, gammas[0]) * _fold(kappa, gammas[1:], lam_p) for kappa in partitions_of(d))


def _tuples(k, r):
    if r == 0:
        if k == 0:
            yield ()
        return
    for first in range(k + 1):
        for g in partitions_of(first):
            for rest in _tuples(k - first, r - 1):
                yield (g,) + rest


def layer_by_brute_force(lam, mu, r, k):
    """Sum over every gamma tuple and every (lam', mu') of the right sizes."""
    out = Counter()
    for gammas in _tuples(k, r):
        for lp in partitions_of(sum(lam) - k) if k <= sum(lam) else ():
            a = _fold(lam, list(gammas), lp)
            if not a:
                continue
            for mp in partitions_of(sum(mu) - k) if k <= sum(mu) else ():
                out[(lp, mp)] += a * _fold(mu, list(gammas), mp)
    return {p: c for p, c in out.items() if c}


def pairs_up_to(total):
    for s in range(total + 1):
        for a in range(s + 1):
            for lam in partitions_of(a):
                for mu in partitions_of(s - a):
                    yield lam, mu


def test_adjoint_layer():
    assert socle_layer_injective((1,), (1,), 2, 1) == {((), ()): 2}


@pytest.mark.parametrize("r", range(1, 6))
def test_adjoint_layer_grows_with_blocks(r):
    assert socle_layer_injective((1,), (1,), r, 1) == {((), ()): r}


def test_top_layer_is_simple_socle():
    for lam, mu in pairs_up_to(5):
        for r in (1, 2, 3):
            assert socle_layer_injective(lam, mu, r, 0) == {(lam, mu): 1}


def test_column_pairs_follow_closed_form():
    for m in range(1, 5):
        for n in range(1, 5):
            for i in range(min(m, n) + 1):
                assert socle_layer_injective(column(m), column(n), 2, i) == {(column(m - i), column(n - i)): i + 1}


def test_layer_out_of_range_is_empty():
    assert socle_layer_injective((2,), (1,), 2, 2) == {}
    assert socle_layer_injective((2,), (1,), 2, -1) == {}


def test_layers_match_brute_force():
    for lam, mu in pairs_up_to(5):
        for r in (1, 2, 3):
            for k in range(min(sum(lam), sum(mu)) + 1):
                assert socle_layer_injective(lam, mu, r, k) == layer_by_brute_force(lam, mu, r, k), (lam, mu, r, k)


def test_reduced_hom_dual_layers():
    # r = 1: S_lam(V) (x) S_mu(V*) has layers given by ordinary LR coefficients
    assert socle_layers_injective((1,), (1,), 1) == [{((1,), (1,)): 1}, {((), ()): 1}]
    assert socle_layers_injective((2,), (1, 1), 1) == [{((2,), (1, 1)): 1}, {((1,), (1,)): 1}]
    assert socle_layers_injective((2,), (2,), 1) == [{((2,), (2,)): 1}, {((1,), (1,)): 1}, {((), ()): 1}]


def test_degree_shift():
    for lam, mu in pairs_up_to(6):
        for r in (1, 2, 3):
            for k, layer in enumerate(socle_layers_injective(lam, mu, r)):
                for lp, mp in layer:
                    assert sum(lam) - sum(lp) == sum(mu) - sum(mp) == k


def test_layers_are_dense():
    layers = socle_layers_injective((2, 1), (1, 1), 2)
    assert all(layers)
    assert len(layers) == 3


def test_jh_examples():
    assert jh_injective((1,), (1,), 2) == {((1,), (1,)): 1, ((), ()): 2}
    assert jh_injective((1,), (1,), 1) == {((1,), (1,)): 1, ((), ()): 1}
    for r in (1, 2, 4):
        assert jh_injective((1,), (), r) == {((1,), ()): 1}


def test_empty_side_forces_empty_gammas():
    for lam in [(1,), (2, 1), (3,)]:
        for r in (1, 2, 3):
            assert socle_layers_injective(lam, (), r) == [{(lam, ()): 1}]


def test_jh_is_union_of_layers():
    for lam, mu in pairs_up_to(6):
        for r in (1, 2, 3):
            total = Counter()
            for layer in socle_layers_injective(lam, mu, r):
                total.update(layer)
            assert dict(total) == jh_injective(lam, mu, r)


def test_blocks_must_be_positive():
    with pytest.raises(DomainError):
        socle_layer_injective((1,), (1,), 0, 0)
    with pytest.raises(DomainError):
        jh_injective((1,), (1,), 0)


def test_branching_entries():
    for lam, mu in pairs_up_to(4):
        assert branching_matrix_entry(lam, mu, lam, mu) == 1
    assert branching_matrix_entry((1,), (1,), (), ()) == 1
    assert branching_matrix_entry((2,), (1,), (1,), ()) == 1
    assert branching_matrix_entry((2,), (1,), (), ()) == 0  # size mismatch
    assert branching_matrix_entry((2, 1), (2, 1), (1,), (1,)) == 2


def _matrix_power_row(lam, mu, r):
    """Row (lam, mu) of A^r, by repeated vector-matrix products."""
    pairs = list(pairs_up_to(sum(lam) + sum(mu)))
    vec = {(lam, mu): 1}
    for _ in range(r):
        nxt = Counter()
        for (a, b), c in vec.items():
            for p in pairs:
                e = branching_matrix_entry(a, b, *p)
                if e:
                    nxt[p] += c * e
        vec = nxt
    return {p: c for p, c in vec.items() if c}


def test_jh_equals_power_of_branching_matrix():
    for lam, mu in pairs_up_to(5):
        for r in (1, 2, 3):
            assert jh_injective(lam, mu, r) == _matrix_power_row(lam, mu, r), (lam, mu, r)


def test_K_examples():
    assert socle_layers_K(1, 1) == [{((1,), (1,)): 1}, {((), ()): 2}]
    assert socle_layers_K(2, 1) == [{((2,), (1,)): 1, ((1, 1), (1,)): 1}, {((1,), ()): 4}]


def test_K_weights_by_irrep_dimensions():
    # (2,1) and (2,1) contribute with weight 2 * 2 = 4 to layer 0 of K_{3|3}
    assert socle_layers_K(3, 3)[0][((2, 1), (2, 1))] == 4


def test_K_degenerate_rank_is_rejected_by_default():
    with pytest.raises(DomainError):
        socle_layers_K(1, 0)
    with pytest.raises(DomainError):
        socle_layers_J(0, 2)
    assert socle_layers_K(1, 0, allow_degenerate=True) == [{((1,), ()): 1}]
    assert socle_layers_J(1, 0, allow_degenerate=True) == [{((1,), ()): 1}]


def test_K_layers_have_matching_atypicality_shadow():
    for m in range(1, 5):
        for n in range(1, 5):
            for k, layer in enumerate(socle_layers_K(m, n)):
                for lp, mp in layer:
                    assert m - sum(lp) == n - sum(mp) == k


def test_J_examples():
    assert socle_layers_J(1, 1)[1] == {((), ()): 2}
    assert socle_layers_J(3, 2)[2] == {((1,), ()): 3}
    assert socle_layers_J(4, 3)[0] == {((1, 1, 1, 1), (1, 1, 1)): 1}


def test_J_closed_form_matches_general_formula():
    for m in range(1, 7):
        for n in range(1, 7):
            assert socle_layers_J(m, n) == socle_layers_injective(column(m), column(n), 2)


def test_layers_json_schema():
    doc = socle.layers_to_json(socle_layers_injective((1,), (1,), 2))
    assert doc == [
        {"k": 0, "summands": [{"lambda": [1], "mu": [1], "mult": 1}]},
        {"k": 1, "summands": [{"lambda": [], "mu": [], "mult": 2}]},
    ]
