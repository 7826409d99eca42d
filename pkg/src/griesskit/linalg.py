"""Dense exact linear algebra over Q or Q(sqrt d).

Matrices are lists of row lists. Nothing here ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Sequence

from .scalar import QuadScalar

Matrix = List[list]


class LinAlgError(ValueError):
    pass


class NoSolution(LinAlgError):
    pass


class NonUnique(LinAlgError):
    pass


class NonSquare(LinAlgError):
    pass


class ResidualNonzero(LinAlgError):
    """Candidate eigenvalues do not account for the whole space."""

    def __init__(self, msg, split=None):
        super().__init__(msg)
        self.split = split


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)] if A else []


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    n, m = len(B), len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [Fraction(0)] * m
        for k, a in enumerate(row):
            if a:
                bk = B[k]
                for j in range(m):
                    b = bk[j]
                    if b:
                        acc[j] += a * b
        out.append(acc)
    return out


def matvec(A: Matrix, v: Sequence) -> list:
    out = []
    for row in A:
        s = Fraction(0)
        for a, x in zip(row, v):
            if a and x:
                s += a * x
        out.append(s)
    return out


def is_identity(A: Matrix) -> bool:
    return all(A[i][j] == (1 if i == j else 0) for i in range(len(A)) for j in range(len(A)))


def _is_rational(M) -> bool:
    return all(not isinstance(x, QuadScalar) for row in M for x in row)


def _integerize(M: Matrix):
    """Scale each row to integers; return (int matrix, row scale factors)."""
    out, scales = [], []
    for row in M:
        row = [Fraction(x) for x in row]
        den = 1
        for x in row:
            if x.denominator != 1:
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
        scales.append(den)
    return out, scales


def bareiss_echelon(M: Matrix):
    """Fraction-free forward elimination (Bareiss) with deterministic pivoting.

    Works in place on a copy. Returns ``(E, pivots, swaps)`` where ``pivots``
    is a list of ``(row, col)`` and ``swaps`` the number of row exchanges.
    Entries of ``E`` stay in the ring generated by the input entries.
    """
    E = [list(r) for r in M]
    rows = len(E)
    cols = len(E[0]) if rows else 0
    pivots = []
    swaps = 0
    prev = 1
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        p = next((i for i in range(r, rows) if E[i][c]), None)
        if p is None:
            continue
        if p != r:
            E[r], E[p] = E[p], E[r]
            swaps += 1
        piv = E[r][c]
        prow = E[r]
        for i in range(r + 1, rows):
            row = E[i]
            f = row[c]
            for j in range(c + 1, cols):
                val = piv * row[j] - f * prow[j]
                # exact by Sylvester's identity
                row[j] = val // prev if isinstance(val, int) else val / prev
            row[c] = 0
        pivots.append((r, c))
        prev = piv
        r += 1
    return E, pivots, swaps


def determinant(A: Matrix):
    n = len(A)
    if any(len(row) != n for row in A):
        raise NonSquare(f"determinant of a non-square {n}x{len(A[0]) if A else 0} matrix")
    if n == 0:
        return Fraction(1)
    if _is_rational(A):
        M, scales = _integerize(A)
        E, pivots, swaps = bareiss_echelon(M)
        if len(pivots) < n:
            return Fraction(0)
        den = 1
        for s in scales:
            den *= s
        return Fraction((-1) ** swaps * E[n - 1][n - 1], den)
    E, pivots, swaps = bareiss_echelon(A)
    if len(pivots) < n:
        return Fraction(0)
    return E[n - 1][n - 1] * (-1) ** swaps


def solve_linear(A: Matrix, b: Sequence) -> list:
    """Unique exact solution of ``A x = b``.

    Raises :class:`NoSolution` for an inconsistent system and
    :class:`NonUnique` for a consistent rank-deficient one.
    """
    rows = len(A)
    if rows != len(b):
        raise LinAlgError("right-hand side length does not match the matrix")
    cols = len(A[0]) if rows else 0
    aug = [list(A[i]) + [b[i]] for i in range(rows)]
    if _is_rational(aug):
        aug, _ = _integerize(aug)
    E, pivots, _ = bareiss_echelon(aug)
    if any(c == cols for _, c in pivots):
        raise NoSolution("inconsistent linear system")
    if len(pivots) < cols:
        raise NonUnique(f"rank {len(pivots)} < {cols} unknowns")
    x = [Fraction(0)] * cols
    for r, c in reversed(pivots):
        s = E[r][cols]
        for j in range(c + 1, cols):
            if E[r][j]:
                s = s - E[r][j] * x[j]
        piv = E[r][c]
        x[c] = Fraction(s, piv) if isinstance(s, int) and isinstance(piv, int) else s / piv
    return x


def rref(A: Matrix):
    """Reduced row echelon form over the field; returns ``(R, pivot_cols)``."""
    R = [list(r) for r in A]
    rows = len(R)
    cols = len(R[0]) if rows else 0
    piv_cols = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        p = next((i for i in range(r, rows) if R[i][c]), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][c] if not isinstance(R[r][c], int) else Fraction(1, R[r][c])
        R[r] = [x * inv if x else x for x in R[r]]
        prow = R[r]
        nz = [j for j in range(c, cols) if prow[j]]
        for i in range(rows):
            if i != r and R[i][c]:
                f = R[i][c]
                row = R[i]
                for j in nz:
                    row[j] = row[j] - f * prow[j]
        piv_cols.append(c)
        r += 1
    return R[:r], piv_cols


def rank(A: Matrix) -> int:
    if not A:
        return 0
    if _is_rational(A):
        A, _ = _integerize(A)
    return len(bareiss_echelon(A)[1])


def nullspace(A: Matrix, ncols: int | None = None) -> List[list]:
    """Basis of ``{x : A x = 0}``, one vector per free column, in column order."""
    cols = ncols if ncols is not None else (len(A[0]) if A else 0)
    if not A:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    R, piv = rref(A)
    pset = set(piv)
    basis = []
    for f in range(cols):
        if f in pset:
            continue
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, c in zip(R, piv):
            if row[f]:
                v[c] = -row[f]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class EigenSplit:
    spaces: list  # [(eigenvalue, [basis vectors])]
    residual: int  # dimension not explained by the candidates

    def dims(self):
        return tuple(len(b) for _, b in self.spaces)

    def space(self, value):
        for lam, basis in self.spaces:
            if lam == value:
                return basis
        raise KeyError(value)


def eigensplit(A: Matrix, candidates: Sequence, strict: bool = True) -> EigenSplit:
    """Split the space into kernels of ``A - lambda I`` for the given candidates.

    With ``strict`` (the default) a nonzero residual raises
    :class:`ResidualNonzero`.
    """
    n = len(A)
    if any(len(row) != n for row in A):
        raise NonSquare("eigensplit needs a square matrix")
    spaces = []
    total = 0
    for lam in candidates:
        shifted = [[A[i][j] - (lam if i == j else 0) for j in range(n)] for i in range(n)]
        basis = nullspace(shifted, n)
        spaces.append((lam, basis))
        total += len(basis)
    split = EigenSplit(spaces, n - total)
    if strict and split.residual:
        raise ResidualNonzero(
            f"candidates {list(candidates)} explain {total} of {n} dimensions", split
        )
    return split
