import random
from fractions import Fraction as F

import pytest

from chisholm import linalg
from chisholm.errors import SingularSystem


def test_identity_returns_rhs():
    n = 5
    mat = [[F(1 if i == j else 0) for j in range(n)] for i in range(n)]
    rhs = [F(k + 1, 3) for k in range(n)]
    assert linalg.solve(linalg.DenseSystem(mat, rhs)) == rhs


def test_rank_deficient_raises():
    with pytest.raises(SingularSystem):
        linalg.solve(linalg.DenseSystem([[F(1), F(1)], [F(1), F(1)]], [F(1), F(2)]))


def test_float_rank_deficient_raises():
    with pytest.raises(SingularSystem):
        linalg.solve(linalg.DenseSystem([[1.0, 1.0], [1.0, 1.0]], [1.0, 2.0]))


def test_geometric_series_denominator_system():
    # order-1 denominator equations for the all-ones coefficient grid,
    # solved by hand from the coefficient and symmetrized equations:
    # b10 = -1, b01 = -1, b11 = 1
    mat = [
        [F(1), F(0), F(0)],   # c20 + b10*c10 = 0
        [F(0), F(1), F(0)],   # c02 + b01*c01 = 0
        [F(2), F(2), F(2)],   # paired (2,1)+(1,2) equation
    ]
    rhs = [F(-1), F(-1), F(-2)]
    assert linalg.solve(linalg.DenseSystem(mat, rhs)) == [F(-1), F(-1), F(1)]


def test_exact_solution_reproduces_rhs():
    random.seed(11)
    n = 12
    mat = [[F(random.randint(-9, 9), random.randint(1, 9)) for _ in range(n)]
           for _ in range(n)]
    rhs = [F(random.randint(-9, 9)) for _ in range(n)]
    x = linalg.solve(linalg.DenseSystem(mat, rhs))
    for row, b in zip(mat, rhs):
        assert sum(v * xv for v, xv in zip(row, x)) == b


def test_row_permutation_leaves_solution_unchanged():
    random.seed(3)
    n = 9
    mat = [[F(random.randint(-5, 5)) for _ in range(n)] for _ in range(n)]
    rhs = [F(random.randint(-5, 5)) for _ in range(n)]
    base = linalg.solve(linalg.DenseSystem(mat, rhs))
    order = list(range(n))
    random.shuffle(order)
    permuted = linalg.solve(
        linalg.DenseSystem([mat[i] for i in order], [rhs[i] for i in order])
    )
    assert permuted == base


def test_float_agrees_with_exact_on_small_integer_systems():
    random.seed(20240601)
    for _ in range(25):
        n = random.randint(2, 20)
        mat = [[F(random.randint(-9, 9)) for _ in range(n)] for _ in range(n)]
        rhs = [F(random.randint(-9, 9)) for _ in range(n)]
        try:
            exact = linalg.solve(linalg.DenseSystem(mat, rhs))
        except SingularSystem:
            continue
        if any(abs(v) > 10 ** 6 for v in exact):
            continue
        approx = linalg.solve(
            linalg.DenseSystem(
                [[float(v) for v in row] for row in mat],
                [float(v) for v in rhs],
            )
        )
        for e, a in zip(exact, approx):
            scale = max(1.0, abs(float(e)))
            assert abs(float(e) - a) <= 1e-8 * scale


def test_float_residual_postcondition():
    random.seed(99)
    n = 30
    mat = [[random.uniform(-1, 1) for _ in range(n)] for _ in range(n)]
    rhs = [random.uniform(-1, 1) for _ in range(n)]
    x = linalg.solve(linalg.DenseSystem(mat, rhs))
    for row, b in zip(mat, rhs):
        r = abs(sum(v * xv for v, xv in zip(row, x)) - b)
        scale = sum(abs(v * xv) for v, xv in zip(row, x)) + abs(b)
        assert r <= 1e-10 * max(scale, 1e-30)


def test_dixon_path_matches_bareiss():
    random.seed(5)
    n = max(linalg.DIXON_MIN_N, 64)
    mat = [[F(random.randint(-99, 99), random.randint(1, 13)) for _ in range(n)]
           for _ in range(n)]
    rhs = [F(random.randint(-99, 99), random.randint(1, 7)) for _ in range(n)]
    rows = [linalg._cleared_row(mat[i], rhs[i]) for i in range(n)]
    bare = linalg._solve_bareiss([list(r) for r in rows], n)
    dixon = linalg._solve_dixon([list(r) for r in rows], n)
    assert dixon is not None
    assert dixon == bare


def test_complex_float_backend():
    mat = [[1.0 + 0j, 2.0j], [0.5j, 1.0 + 0j]]
    rhs = [1.0 + 1.0j, 2.0 - 1.0j]
    x = linalg.solve(linalg.DenseSystem(mat, rhs))
    for row, b in zip(mat, rhs):
        assert abs(sum(v * xv for v, xv in zip(row, x)) - b) < 1e-12


def test_malformed_systems_rejected():
    with pytest.raises(ValueError):
        linalg.DenseSystem([[F(1), F(2)]], [F(1)])
    with pytest.raises(ValueError):
        linalg.DenseSystem([[F(1)]], [F(1), F(2)])
    with pytest.raises(ValueError):
        linalg.DenseSystem([], [])
