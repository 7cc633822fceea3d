"""Exact determinant engines against an independent oracle."""
import random

import pytest
import sympy

from powertree import (build_group, build_power_graph, det_bareiss, det_crt,
                       ones_plus_laplacian)
from powertree.determinant import hadamard_bound_squared

# ones-plus-Laplacian of the order-8 quaternion group, written down by hand:
# three order-4 pairs, then the identity and the central involution
QUATERNION_MATRIX = [
    [4, 0, 1, 1, 1, 1, 0, 0],
    [0, 4, 1, 1, 1, 1, 0, 0],
    [1, 1, 4, 0, 1, 1, 0, 0],
    [1, 1, 0, 4, 1, 1, 0, 0],
    [1, 1, 1, 1, 4, 0, 0, 0],
    [1, 1, 1, 1, 0, 4, 0, 0],
    [0, 0, 0, 0, 0, 0, 8, 0],
    [0, 0, 0, 0, 0, 0, 0, 8],
]


def _random_matrix(rng, n, span):
    return [[rng.randint(-span, span) for _ in range(n)] for _ in range(n)]


def test_small_random_matrices_match_sympy():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randrange(1, 8)
        matrix = _random_matrix(rng, n, 9)
        expected = int(sympy.Matrix(matrix).det())
        assert det_bareiss(matrix) == expected
        assert det_crt(matrix) == expected


def test_singular_matrices():
    rng = random.Random(19)
    for _ in range(50):
        n = rng.randrange(2, 7)
        matrix = _random_matrix(rng, n, 9)
        matrix[n - 1] = list(matrix[0])  # duplicate row
        assert det_bareiss(matrix) == 0
        assert det_crt(matrix) == 0
    zeros = [[0] * 4 for _ in range(4)]
    assert det_bareiss(zeros) == 0
    assert det_crt(zeros) == 0


def test_permutation_matrices_have_unit_determinant():
    rng = random.Random(29)
    for _ in range(50):
        n = rng.randrange(1, 9)
        perm = list(range(n))
        rng.shuffle(perm)
        matrix = [[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)]
        expected = int(sympy.Matrix(matrix).det())
        assert expected in (-1, 1)
        assert det_bareiss(matrix) == expected
        assert det_crt(matrix) == expected


def test_trivial_sizes():
    assert det_bareiss([]) == 1
    assert det_crt([]) == 1
    assert det_bareiss([[7]]) == 7
    assert det_crt([[-3]]) == -3


def test_engines_agree_on_large_entries():
    rng = random.Random(31)
    for _ in range(20):
        n = rng.randrange(2, 13)
        matrix = _random_matrix(rng, n, 10 ** 6)
        assert det_bareiss(matrix) == det_crt(matrix)


def test_non_square_rejected():
    with pytest.raises(ValueError):
        det_bareiss([[1, 2], [3, 4], [5, 6]])
    with pytest.raises(ValueError):
        det_crt([[1, 2, 3], [4, 5, 6]])


def test_hadamard_bound_holds():
    rng = random.Random(37)
    for _ in range(50):
        n = rng.randrange(1, 7)
        matrix = _random_matrix(rng, n, 20)
        det = det_bareiss(matrix)
        assert det * det <= hadamard_bound_squared(matrix)


def test_ones_plus_laplacian_entries():
    graph = build_power_graph(build_group("cyclic:6"))
    matrix = ones_plus_laplacian(graph)
    n = graph.n
    for i in range(n):
        assert matrix[i][i] == graph.degree(i) + 1
        assert sum(matrix[i]) == n
        for j in range(n):
            if i != j:
                assert matrix[i][j] == (0 if graph.has_edge(i, j) else 1)


def test_quaternion_matrix_determinant():
    assert det_bareiss(QUATERNION_MATRIX) == 2 ** 17
    assert det_crt(QUATERNION_MATRIX) == 2 ** 17
    built = ones_plus_laplacian(build_power_graph(build_group("quaternion:8")))
    assert det_bareiss(built) == 2 ** 17
