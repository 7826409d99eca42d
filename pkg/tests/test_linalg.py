from fractions import Fraction as F
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from griesskit import linalg
from griesskit.scalar import QuadScalar

small = st.builds(F, st.integers(-8, 8), st.integers(1, 6))


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def leibniz(M):
    n = len(M)
    total = F(0)
    for p in permutations(range(n)):
        inv = sum(p[i] > p[j] for i in range(n) for j in range(i + 1, n))
        term = F(-1) ** inv
        for i in range(n):
            term *= M[i][p[i]]
        total += term
    return total


@given(st.integers(1, 4).flatmap(square))
def test_determinant_matches_leibniz(M):
    assert linalg.determinant(M) == leibniz(M)


@given(st.integers(1, 4).flatmap(square))
def test_rank_nullity(M):
    n = len(M)
    ker = linalg.nullspace(M, n)
    assert linalg.rank(M) + len(ker) == n
    for v in ker:
        assert all(x == 0 for x in linalg.matvec(M, v))


@given(st.integers(1, 4).flatmap(square), st.data())
def test_solve(M, data):
    n = len(M)
    if linalg.determinant(M) == 0:
        return
    x = data.draw(st.lists(small, min_size=n, max_size=n))
    b = linalg.matvec(M, x)
    assert linalg.solve_linear(M, b) == x


def test_solve_errors():
    with pytest.raises(linalg.NoSolution):
        linalg.solve_linear([[F(1), F(1)], [F(1), F(1)]], [F(0), F(1)])
    with pytest.raises(linalg.NonUnique):
        linalg.solve_linear([[F(1), F(1)], [F(1), F(1)]], [F(1), F(1)])


def test_quadratic_determinant():
    r = QuadScalar(0, 1, 5)
    M = [[r, F(1)], [F(1), r]]
    assert linalg.determinant(M) == 4


def test_eigensplit_of_diagonal():
    M = [[F(2), 0, 0], [0, F(1, 2), 0], [0, 0, F(1, 2)]]
    M = [[F(x) for x in row] for row in M]
    split = linalg.eigensplit(M, [F(2), F(0), F(1, 2), F(1, 16)])
    assert len(split.space(F(1, 2))) == 2
    assert len(split.space(F(2))) == 1
    assert split.residual == 0
