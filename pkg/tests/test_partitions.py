from itertools import permutations
from math import factorial

import pytest
import sympy as sp

from socle_lab.partitions import (
    conjugate,
    contains,
    format_partition,
    lr_coeff,
    lr_coeff_oracle,
    multi_lr,
    parse_partition,
    partition,
    partitions_of,
    skew_expand,
    subdiagrams,
    sym_group_dim,
)


def all_partitions(max_size):
    for n in range(max_size + 1):
        yield from partitions_of(n)


def test_partition_validation():
    assert partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(ValueError):
        partition([1, 2])
    with pytest.raises(ValueError):
        partition([2, -1])


@pytest.mark.parametrize("text, parsed", [("3,2,1", (3, 2, 1)), ("-", ()), ("", ()), ("4,0", (4,))])
def test_parse_partition(text, parsed):
    assert parse_partition(text) == parsed


@pytest.mark.parametrize("text", ["1,2", "a", "3,,1", "-1"])
def test_parse_partition_rejects_garbage(text):
    with pytest.raises(ValueError):
        parse_partition(text)


def test_format_round_trip():
    for lam in all_partitions(6):
        assert parse_partition(format_partition(lam)) == lam


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((4,)) == (1, 1, 1, 1)
    assert conjugate((3, 2)) == (2, 2, 1)


def test_conjugate_is_involution():
    for lam in all_partitions(8):
        assert conjugate(conjugate(lam)) == lam
        assert sum(conjugate(lam)) == sum(lam)


def test_partitions_of_counts():
    # p(n) for n = 0..10
    assert [len(list(partitions_of(n))) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_subdiagrams():
    assert set(subdiagrams((2, 1))) == {(), (1,), (2,), (1, 1), (2, 1)}
    assert set(subdiagrams((2, 1), 1)) == {(1,)}
    for lam in all_partitions(5):
        for mu in subdiagrams(lam):
            assert contains(lam, mu)


def test_lr_examples():
    for lam in all_partitions(5):
        assert lr_coeff(lam, lam, ()) == 1
        assert lr_coeff(lam, (), lam) == 1
    assert lr_coeff((2,), (1,), (1,)) == 1
    assert lr_coeff((1, 1), (1,), (1,)) == 1
    assert lr_coeff((3, 2, 1), (2, 1), (2, 1)) == 2


def test_lr_zero_cases():
    assert lr_coeff((2, 1), (1,), (1,)) == 0  # size mismatch
    assert lr_coeff((2,), (1, 1), ()) == 0  # mu not inside lam
    assert lr_coeff((3,), (1, 1), (1,)) == 0


def test_oracle_examples():
    assert lr_coeff_oracle((3, 1), (3, 1), ()) == 1
    assert lr_coeff_oracle((2, 1), (1,), (1, 1)) == 1
    assert lr_coeff_oracle((4, 2), (2, 1), (2, 1)) == 1
    assert lr_coeff_oracle((3, 2, 1), (2, 1), (2, 1)) == 2


def _schur_via_jacobi_trudi(lam, xs):
    """s_lam(xs) = det(h_{lam_i - i + j}) with h_k from the generating function."""
    t = sp.Symbol("t")
    k_max = sum(lam)
    gen = sp.Integer(1)
    for x in xs:
        gen *= sum((x * t) ** p for p in range(k_max + 1))
    gen = sp.expand(gen)
    h = [gen.coeff(t, k) for k in range(k_max + 1)]

    def hk(k):
        return h[k] if 0 <= k <= k_max else 0

    rows = len(lam)
    if rows == 0:
        return sp.Integer(1)
    return sp.expand(sp.Matrix(rows, rows, lambda i, j: hk(lam[i] - i + j)).det())


def _expand_in_schur(poly, xs):
    """Decompose a symmetric polynomial by peeling off lex-leading monomials."""
    out = {}
    poly = sp.Poly(poly, *xs)
    while not poly.is_zero:
        exps, coeff = poly.terms()[0]  # lex-leading term is a dominant exponent
        kappa = partition(exps)
        out[kappa] = int(coeff)
        poly = poly - sp.Poly(coeff * _schur_via_jacobi_trudi(kappa, xs), *xs)
    return out


def test_lr_against_schur_polynomial_products():
    # independent check of both counts through s_mu * s_nu for |lam| <= 4
    for total in range(5):
        xs = sp.symbols(f"x0:{max(total, 1)}")
        for k in range(total + 1):
            for mu in partitions_of(k):
                for nu in partitions_of(total - k):
                    prod = sp.expand(_schur_via_jacobi_trudi(mu, xs) * _schur_via_jacobi_trudi(nu, xs))
                    expansion = _expand_in_schur(prod, xs)
                    for lam in partitions_of(total):
                        want = expansion.get(lam, 0)
                        assert lr_coeff(lam, mu, nu) == want, (lam, mu, nu)
                        assert lr_coeff_oracle(lam, mu, nu) == want, (lam, mu, nu)


def test_lr_symmetric_in_factors_up_to_size_8():
    for total in range(9):
        for lam in partitions_of(total):
            for mu in subdiagrams(lam):
                for nu in partitions_of(total - sum(mu)):
                    assert lr_coeff(lam, mu, nu) == lr_coeff(lam, nu, mu)


def test_lr_conjugation_symmetry():
    for total in range(7):
        for lam in partitions_of(total):
            for mu in subdiagrams(lam):
                for nu in partitions_of(total - sum(mu)):
                    assert lr_coeff(lam, mu, nu) == lr_coeff(conjugate(lam), conjugate(mu), conjugate(nu))


def test_sym_group_dim_examples():
    assert sym_group_dim((5,)) == 1
    assert sym_group_dim((1, 1, 1, 1)) == 1
    assert sym_group_dim((2, 1)) == 2
    assert sym_group_dim(()) == 1
    assert sym_group_dim((3, 2)) == 5


def test_sum_of_squared_dims_is_factorial():
    for n in range(9):
        assert sum(sym_group_dim(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


def test_multi_lr_examples():
    assert multi_lr((2, 1), [], (2, 1)) == 1
    assert multi_lr((2, 1), [], (2,)) == 0
    assert multi_lr((1,), [(1,), ()], ()) == 1
    assert multi_lr((2, 1), [(1,), (1,)], (1,)) == 2


def _fold(lam, gammas, lam_p):
    """Explicit fold: peel gamma_1 off lam, then recurse on the remainder."""
    if not gammas:
        return int(lam == lam_p)
    first, rest = gammas[0], gammas[1:]
    d = sum(lam) - sum(first)
    if d < 0:
        return 0
    return sum(lr_coeff(lam, kappa, first) * _fold(kappa, rest, lam_p) for kappa in partitions_of(d))


def test_multi_lr_matches_explicit_fold_in_every_order():
    cases = 0
    for lam in all_partitions(4):
        for r in range(1, 4):
            for k in range(sum(lam) + 1):
                for gammas in _gamma_tuples(k, r):
                    for lam_p in partitions_of(sum(lam) - k):
                        value = multi_lr(lam, gammas, lam_p)
                        for order in set(permutations(gammas)):
                            assert _fold(lam, list(order), lam_p) == value
                            cases += 1
    assert cases > 300


def _gamma_tuples(k, r):
    if r == 0:
        if k == 0:
            yield ()
        return
    for first in range(k + 1):
        for g in partitions_of(first):
            for rest in _gamma_tuples(k - first, r - 1):
                yield (g,) + rest


def test_skew_expand_small_shapes():
    assert skew_expand((2, 1), [(1,)]) == {(2,): 1, (1, 1): 1}
    assert skew_expand((2, 1), [(1,), (1,)]) == {(1,): 2}
    assert skew_expand((1,), [(2,)]) == {}
