import random
from fractions import Fraction

import sympy as sp

from socle_lab.linalg import Echelon, integral, kernel, rank, span_contains


def random_columns(rng, rows, cols, density=0.5):
    out = {}
    for j in range(cols):
        col = {}
        for i in range(rows):
            if rng.random() < density:
                col[i] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        out[f"c{j}"] = col
    return out


def to_matrix(columns, rows):
    keys = list(columns)
    mat = sp.zeros(rows, len(keys))
    for c, k in enumerate(keys):
        for i, v in columns[k].items():
            mat[i, c] = sp.Rational(v.numerator, v.denominator)
    return mat, keys


def test_integral_is_primitive_and_on_the_same_line():
    assert integral({"a": Fraction(1, 2), "b": Fraction(-3, 4), "c": 0}) == {"a": 2, "b": -3}
    assert integral({"a": 6, "b": 4}) == {"a": 3, "b": 2}
    assert integral({}) == {}


def test_rank_and_kernel_against_sympy():
    rng = random.Random(5)
    for _ in range(60):
        rows, cols = rng.randint(1, 6), rng.randint(1, 7)
        columns = random_columns(rng, rows, cols)
        mat, keys = to_matrix(columns, rows)
        assert rank(columns.values()) == mat.rank()
        basis = kernel(columns)
        assert len(basis) == cols - mat.rank()
        for vec in basis:
            x = sp.Matrix([vec.get(k, 0) for k in keys])
            assert x != sp.zeros(cols, 1)
            assert mat * x == sp.zeros(rows, 1)


def test_echelon_membership():
    ech = Echelon()
    assert ech.add({"x": 1, "y": 1})
    assert ech.add({"y": 2, "z": Fraction(1, 3)})
    assert not ech.add({"x": 2, "y": 4, "z": Fraction(1, 3)})
    assert ech.contains({"x": 1, "y": -1, "z": Fraction(-1, 3)})
    assert not ech.contains({"z": 1})
    assert span_contains([{"x": 1}, {"y": 1}], [{"x": 5, "y": -2}])
    assert not span_contains([{"x": 1}], [{"y": 1}])
