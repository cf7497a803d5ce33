"""Randomized and exhaustive invariant suites behind ``socle-lab verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import factorial
from typing import Callable, Iterator

from . import fock, superchar, zuckerman
from .fock import KAC, VERMA, BarLabel, GrothVec, apply_e, apply_f, apply_h
from .partitions import partitions_of

DEFAULT_SEED = 20240611
INDEX_RANGE = range(-6, 7)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


# -- random inputs -------------------------------------------------------------------


def random_label(rng: random.Random, m: int, n: int, lo: int = -7, hi: int = 7) -> BarLabel:
    return BarLabel(tuple(rng.randint(lo, hi) for _ in range(m)),
                    tuple(rng.randint(lo, hi) for _ in range(n)))


def random_vec(rng: random.Random, kind: str, m: int, n: int, terms: int = 3,
               lo: int = -7, hi: int = 7) -> GrothVec:
    v = GrothVec.zero(kind, m, n)
    for _ in range(rng.randint(1, terms)):
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        label = random_label(rng, m, n, lo, hi)
        if kind == VERMA:
            v = v + GrothVec.basis(VERMA, label) * c
        else:
            v = v + GrothVec.wedge(label.a, label.b) * c
    return v


def random_supersymmetric(rng: random.Random, m: int, n: int) -> superchar.SuperPoly:
    """Small integer combination of super Schur functions and Kac supercharacters.

    Kac supercharacters carry prod (1 - y_j/x_i) and grow quickly, so they are
    only mixed in while m * n <= 4.
    """
    f = superchar.SuperPoly(m, n)
    for _ in range(rng.randint(1, 3)):
        c = rng.choice([-2, -1, 1, 2])
        if m * n > 4 or rng.random() < 0.6:
            lam = rng.choice(list(partitions_of(rng.randint(0, 3))))
            f = f + superchar.super_schur(lam, m, n) * c
        else:
            f = f + superchar.kac_supercharacter(random_dominant(rng, m, n, 1)) * c
    return f


def random_dominant(rng: random.Random, m: int, n: int, bound: int) -> fock.Weight:
    even = sorted((rng.randint(-bound, bound) for _ in range(m)), reverse=True)
    odd = sorted((rng.randint(-bound, bound) for _ in range(n)), reverse=True)
    return fock.Weight(tuple(even), tuple(odd))


# -- suites ---------------------------------------------------------------------------


def _compose(*ops: Callable[[GrothVec], GrothVec]) -> Callable[[GrothVec], GrothVec]:
    def run(v: GrothVec) -> GrothVec:
        for op in reversed(ops):
            v = op(v)
        return v
    return run


def _e(i: int) -> Callable[[GrothVec], GrothVec]:
    return lambda v: apply_e(i, v)


def _f(i: int) -> Callable[[GrothVec], GrothVec]:
    return lambda v: apply_f(i, v)


def relation_failures(v: GrothVec) -> Iterator[str]:
    """Chevalley and Serre relations on one vector, all i, j in [-6, 6]."""
    ev = {j: apply_e(j, v) for j in INDEX_RANGE}
    fv = {j: apply_f(j, v) for j in INDEX_RANGE}
    for i in INDEX_RANGE:
        for j in INDEX_RANGE:
            lhs = apply_e(i, fv[j]) - apply_f(j, ev[i])
            rhs = apply_h(i, v) if i == j else GrothVec.zero(v.kind, v.m, v.n)
            if lhs != rhs:
                yield f"[e_{i}, f_{j}]"
            if abs(i - j) >= 2:
                if apply_e(i, ev[j]) != apply_e(j, ev[i]):
                    yield f"[e_{i}, e_{j}]"
                if apply_f(i, fv[j]) != apply_f(j, fv[i]):
                    yield f"[f_{i}, f_{j}]"
        for j in (i - 1, i + 1):
            for op in (_e, _f):
                a, b = op(i), op(j)
                serre = _compose(a, a, b)(v) - _compose(a, b, a)(v) * 2 + _compose(b, a, a)(v)
                if serre:
                    yield f"Serre({op.__name__[1]}_{i}, {op.__name__[1]}_{j})"


def suite_relations(seed: int = DEFAULT_SEED, size: int = 200) -> list[Check]:
    rng = random.Random(seed)
    checks = []
    for kind, m, n in ((VERMA, 1, 1), (VERMA, 2, 1), (VERMA, 2, 2), (KAC, 2, 2)):
        bad = []
        for _ in range(size):
            v = random_vec(rng, kind, m, n)
            bad.extend(relation_failures(v))
        name = f"{'T' if kind == VERMA else 'W'}_{m}|{n} Chevalley+Serre relations"
        checks.append(Check(name, not bad, f"{size} vectors" + (f", first failure {bad[0]}" if bad else "")))
    return checks


def suite_gamma(seed: int = DEFAULT_SEED, size: int = 20) -> list[Check]:
    rng = random.Random(seed)
    checks = []
    for m in range(1, 4):
        for n in range(1, 4):
            order = factorial(m) * factorial(n)
            elements = list(fock.group_elements(m, n))
            square = equivariant = signed = kac_ok = singular = True
            for _ in range(size):
                v = random_vec(rng, VERMA, m, n)
                g = zuckerman.gamma(v)
                square &= zuckerman.gamma(g) == g * order
                i = rng.choice(INDEX_RANGE)
                equivariant &= zuckerman.gamma(apply_e(i, v)) == apply_e(i, g)
                equivariant &= zuckerman.gamma(apply_f(i, v)) == apply_f(i, g)
                s = rng.choice(elements)
                signed &= zuckerman.gamma(fock.sym_act(s, v)) == g * fock.pair_sign(s)
                k = random_vec(rng, KAC, m, n)
                kac_ok &= zuckerman.gamma(fock.iota_kac(k)) == fock.iota_kac(k) * order
                label = random_label(rng, m, n)
                if m >= 2:
                    label = BarLabel((label.a[1],) + label.a[1:], label.b)
                elif n >= 2:
                    label = BarLabel(label.a, (label.b[1],) + label.b[1:])
                if m >= 2 or n >= 2:
                    singular &= not zuckerman.gamma(GrothVec.basis(VERMA, label))
            tag = f"gl({m}|{n})"
            checks.append(Check(f"{tag} gamma^2 = {order} gamma", square))
            checks.append(Check(f"{tag} gamma commutes with e_i, f_i", equivariant))
            checks.append(Check(f"{tag} gamma o s = sgn(s) gamma", signed))
            checks.append(Check(f"{tag} gamma o iota = {order} iota", kac_ok))
            checks.append(Check(f"{tag} gamma kills singular labels", singular))
    return checks


def suite_ds(seed: int = DEFAULT_SEED, size: int = 100) -> list[Check]:
    rng = random.Random(seed)
    cancel = stable = pairs = True
    for m in range(0, 4):
        for n in range(0, 4):
            for d in range(6):
                for lam in partitions_of(d):
                    f = superchar.super_schur(lam, m, n)
                    cancel &= superchar.is_supersymmetric(f)
                    if m and n and d <= 4:
                        stable &= superchar.ds_eval(f) == superchar.super_schur(lam, m - 1, n - 1)
                        for i in range(1, m + 1):
                            for j in range(1, n + 1):
                                pairs &= superchar.pair_independence_check(f, i, j)
    kac = True
    for _ in range(50):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        kac &= not superchar.ds_eval(superchar.kac_supercharacter(random_dominant(rng, m, n, 3)))
    hom = True
    for _ in range(size):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        f, g = random_supersymmetric(rng, m, n), random_supersymmetric(rng, m, n)
        hom &= superchar.ds_eval(f * g) == superchar.ds_eval(f) * superchar.ds_eval(g)
        hom &= superchar.ds_eval(f + g) == superchar.ds_eval(f) + superchar.ds_eval(g)
    return [
        Check("super Schur functions are supersymmetric (|lam| <= 5, m,n <= 3)", cancel),
        Check("ds s_lam^(m|n) = s_lam^(m-1|n-1)", stable),
        Check("ds kills 50 random Kac supercharacters", kac),
        Check("ds independent of the chosen (x_i, y_j) pair", pairs),
        Check(f"ds is a ring homomorphism on {size} random pairs", hom),
    ]


def suite_appendix(seed: int = DEFAULT_SEED, size: int = 0) -> list[Check]:
    checks = []
    for m in (1, 2):
        for n in (1, 2):
            part = 2 * (m + n)
            report = fock.appendix_inclusion_report(m, n, -part, part - 1, 0)
            checks.append(Check(
                f"gl({m}|{n}) window [{-part},{part - 1}] split 0: (soc T) cap Y in s.Y",
                report.passed,
                f"{report.weights_checked} weights checked, socle part dim {report.socle_dim}",
            ))
    return checks


SUITES: dict[str, Callable[..., list[Check]]] = {
    "relations": suite_relations,
    "gamma": suite_gamma,
    "ds": suite_ds,
    "appendix": suite_appendix,
}
