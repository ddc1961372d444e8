"""Small exact linear-algebra helpers over rationals and polynomial scalars.

Matrix sizes here stay in the single digits, so cofactor expansion and
naive elimination are fine and keep everything exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .scalars import Chart, ChartScalar

FracMatrix = list[list[Fraction]]
PolyMatrix = list[list[ChartScalar]]


def frac_rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a rational matrix by fraction-free Gaussian elimination."""
    rows = [list(map(Fraction, row)) for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def frac_nullspace(matrix: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Exact basis of the right null space of a rational matrix."""
    rows = [list(map(Fraction, row)) for row in matrix if any(row)]
    pivots: list[int] = []
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
        col += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -rows[r][f]
        basis.append(vec)
    return basis


def frac_solve(matrix: FracMatrix, rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve a square rational system; None if singular."""
    n = len(matrix)
    aug = [list(map(Fraction, row)) + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def poly_det(matrix: PolyMatrix, chart: Chart) -> ChartScalar:
    """Determinant by cofactor expansion along the first row."""
    n = len(matrix)
    if n == 0:
        return ChartScalar.const(chart, 1)
    if n == 1:
        return matrix[0][0]
    total = ChartScalar.zero(chart)
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        minor = [[matrix[r][c] for c in range(n) if c != j] for r in range(1, n)]
        cof = entry * poly_det(minor, chart)
        total = total + cof if j % 2 == 0 else total - cof
    return total


def poly_adjugate(matrix: PolyMatrix, chart: Chart) -> PolyMatrix:
    """Adjugate (transposed cofactor) matrix."""
    n = len(matrix)
    adj = [[ChartScalar.zero(chart) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [matrix[r][c] for c in range(n) if c != j]
                for r in range(n)
                if r != i
            ]
            cof = poly_det(minor, chart)
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return adj


def poly_inverse_constant_det(matrix: PolyMatrix, chart: Chart) -> PolyMatrix | None:
    """Polynomial inverse when det is a nonzero rational constant, else None."""
    det = poly_det(matrix, chart)
    if not det.is_constant() or det.is_zero():
        return None
    inv_det = Fraction(1) / det.constant_value()
    adj = poly_adjugate(matrix, chart)
    return [[entry * inv_det for entry in row] for row in adj]


def poly_pfaffian(matrix: PolyMatrix, chart: Chart, index: Sequence[int] | None = None) -> ChartScalar:
    """Pfaffian of a skew polynomial matrix restricted to an index subset."""
    idx = list(range(len(matrix))) if index is None else list(index)
    if len(idx) % 2:
        return ChartScalar.zero(chart)
    if not idx:
        return ChartScalar.const(chart, 1)
    first = idx[0]
    total = ChartScalar.zero(chart)
    for pos in range(1, len(idx)):
        j = idx[pos]
        entry = matrix[first][j]
        if entry.is_zero():
            continue
        rest = [k for k in idx if k not in (first, j)]
        term = entry * poly_pfaffian(matrix, chart, rest)
        total = total + term if pos % 2 == 1 else total - term
    return total


def float_pfaffian(matrix: np.ndarray) -> float:
    """Pfaffian of a small skew float matrix by recursive expansion."""
    n = matrix.shape[0]
    if n % 2:
        return 0.0
    if n == 0:
        return 1.0
    if n == 2:
        return float(matrix[0, 1])
    total = 0.0
    rest_rows = list(range(1, n))
    for pos, j in enumerate(rest_rows):
        entry = matrix[0, j]
        if entry == 0.0:
            continue
        keep = [k for k in rest_rows if k != j]
        sub = matrix[np.ix_(keep, keep)]
        term = entry * float_pfaffian(sub)
        total += term if pos % 2 == 0 else -term
    return total


def eval_poly_matrix(matrix: PolyMatrix, point) -> FracMatrix:
    return [[entry.evaluate(point) for entry in row] for row in matrix]
