import random
from fractions import Fraction
from itertools import permutations

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from casson_lmo.errors import ArgumentError
from casson_lmo.linalg import charpoly, det, inertia, principal_minor_det
from casson_lmo.random_instances import random_symmetric_matrix


def cofactor_det(M):
    n = len(M)
    if n == 0:
        return 1
    return sum((-1) ** j * M[0][j] * cofactor_det([row[:j] + row[j + 1:] for row in M[1:]]) for j in range(n))


def leibniz_det(M):
    n = len(M)
    total = 0
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = 1
        for i in range(n):
            term *= M[i][p[i]]
        total += (-1) ** inv * term
    return total


square = st.integers(0, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)
)


@st.composite
def symmetric(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            M[i][j] = M[j][i] = draw(st.integers(-5, 5))
    return M


def test_frozen_determinants():
    assert det([]) == 1
    assert det([[2, 1], [1, 2]]) == 3
    assert det([[0, 1], [1, 0]]) == -1
    assert principal_minor_det([[2, 1], [1, 2]], []) == 3
    assert principal_minor_det([[2, 1], [1, 2]], [0, 1]) == 1
    assert principal_minor_det([[2, 1], [1, 2]], [0]) == 2
    with pytest.raises(ArgumentError):
        principal_minor_det([[1]], [1])


@given(square)
@settings(max_examples=200, deadline=None)
def test_det_matches_cofactor_expansion(M):
    assert det(M) == cofactor_det(M)


def test_det_matches_leibniz_on_random_5x5():
    rng = random.Random(2)
    for _ in range(30):
        M = [[rng.randint(-5, 5) for _ in range(5)] for _ in range(5)]
        assert det(M) == leibniz_det(M)


@given(square)
@settings(max_examples=100, deadline=None)
def test_charpoly_matches_sympy(M):
    if not M:
        assert charpoly(M) == [1]
        return
    x = sp.Symbol("x")
    expected = [Fraction(int(c)) for c in reversed(sp.Matrix(M).charpoly(x).all_coeffs())]
    assert charpoly(M) == expected


@given(symmetric())
@settings(max_examples=80, deadline=None)
def test_inertia_matches_root_counting(M):
    pos, neg, zero = inertia(M)
    assert pos + neg + zero == len(M)
    x = sp.Symbol("x")
    roots = sp.Poly(sp.Matrix(M).charpoly(x).as_expr(), x).real_roots()  # with multiplicity
    assert len(roots) == len(M)
    assert (pos, neg, zero) == tuple(sum(1 for r in roots if test(r)) for test in (lambda r: r > 0, lambda r: r < 0, lambda r: r == 0))
    assert (zero == 0) == (det(M) != 0)


def test_inertia_frozen():
    assert inertia([[1]]) == (1, 0, 0)
    assert inertia([[0]]) == (0, 0, 1)
    assert inertia([[0, 1], [1, 0]]) == (1, 1, 0)
    assert inertia([[-2, 0, 0], [0, 0, 0], [0, 0, 3]]) == (1, 1, 1)
    with pytest.raises(ArgumentError):
        inertia([[0, 1], [0, 0]])


def test_inertia_invariant_under_congruence():
    rng = random.Random(4)
    for _ in range(50):
        n = rng.randint(1, 5)
        M = random_symmetric_matrix(rng, n)
        P = [[1 if i == j else (rng.randint(-2, 2) if j > i else 0) for j in range(n)] for i in range(n)]
        PT = [list(r) for r in zip(*P)]
        N = [[sum(PT[i][a] * M[a][b] * P[b][j] for a in range(n) for b in range(n)) for j in range(n)] for i in range(n)]
        assert inertia(N) == inertia(M)
