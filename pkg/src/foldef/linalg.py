"""Exact linear algebra over Q and Q(i).

Vectors are tuples of scalars.  Elimination is fraction-free in the Bareiss
style: each row is first scaled to clear denominators, after which every
division performed during forward elimination is exact in the (Gaussian)
integers, keeping intermediate entries small.  A final normalization pass
produces the reduced row echelon form with leading entries 1, which is the
canonical representation used for all subspace comparisons.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .scalars import Scalar, scalar_denominator_lcm

Vector = tuple[Scalar, ...]
Matrix = list[list[Scalar]]


def _cleared_rows(rows: Sequence[Sequence[Scalar]]) -> Matrix:
    out: Matrix = []
    for row in rows:
        lcm = 1
        for v in row:
            if v != 0:
                d = scalar_denominator_lcm(v)
                lcm = lcm * d // math.gcd(lcm, d)
        out.append([v * lcm for v in row])
    return out


def _forward_eliminate(m: Matrix) -> list[int]:
    """In-place fraction-free (Bareiss) elimination; returns pivot columns."""
    if not m:
        return []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    prev: Scalar = Fraction(1)
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
        pivot = m[r][c]
        for i in range(r + 1, nrows):
            factor = m[i][c]
            if factor == 0:
                # still rescale so the Bareiss division by prev stays exact
                for j in range(c + 1, ncols):
                    if m[i][j] != 0:
                        m[i][j] = (pivot * m[i][j]) / prev
                continue
            for j in range(c + 1, ncols):
                m[i][j] = (pivot * m[i][j] - factor * m[r][j]) / prev
            m[i][c] = Fraction(0)
        prev = pivot
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(rows: Sequence[Sequence[Scalar]]) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    """Canonical reduced row echelon form (zero rows dropped) and pivot columns."""
    m = _cleared_rows(rows)
    pivots = _forward_eliminate(m)
    if not pivots:
        return (), ()
    ncols = len(m[0])
    reduced = [m[i][:] for i in range(len(pivots))]
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        pivot = reduced[k][c]
        reduced[k] = [v / pivot for v in reduced[k]]
        for i in range(k):
            factor = reduced[i][c]
            if factor == 0:
                continue
            reduced[i] = [a - factor * b for a, b in zip(reduced[i], reduced[k])]
    return tuple(tuple(row) for row in reduced), tuple(pivots)


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Scalar]], ncols: int) -> tuple[Vector, ...]:
    """Canonical (echelonized) basis of {v : M v = 0}."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis: list[list[Scalar]] = []
    for f in free_cols:
        v: list[Scalar] = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -reduced[k][f]
        basis.append(v)
    canonical, _ = rref(basis)
    return canonical


def reduce_against(reduced: Sequence[Vector], pivots: Sequence[int], vector: Sequence[Scalar]) -> Vector:
    """Remainder of a vector after reduction by an RREF basis."""
    v = list(vector)
    for k, c in enumerate(pivots):
        factor = v[c]
        if factor == 0:
            continue
        row = reduced[k]
        v = [a - factor * b for a, b in zip(v, row)]
    return tuple(v)


def in_row_space(reduced: Sequence[Vector], pivots: Sequence[int], vector: Sequence[Scalar]) -> bool:
    return all(v == 0 for v in reduce_against(reduced, pivots, vector))


def solve(rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar], ncols: int) -> Vector | None:
    """One exact solution of M x = rhs (free variables set to 0), or None."""
    if not rows:
        return (Fraction(0),) * ncols
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = rref(augmented)
    solution: list[Scalar] = [Fraction(0)] * ncols
    for k, c in enumerate(pivots):
        if c == ncols:
            return None
        solution[c] = reduced[k][ncols]
    return tuple(solution)


def line_complement(reduced: Sequence[Vector], line: Sequence[Scalar]) -> tuple[Vector, ...]:
    """Canonical basis of a complement of span(line) inside the row space.

    The line's leading coordinate is projected out of every basis row; the
    projected rows span the complement {v in space : v[pivot] = 0}, which maps
    one-to-one onto the quotient space modulo the line.
    """
    pivot = None
    for c, v in enumerate(line):
        if v != 0:
            pivot = c
            break
    if pivot is None:
        raise ValueError("cannot quotient by the zero vector")
    unit = [v / line[pivot] for v in line]
    projected = []
    for row in reduced:
        factor = row[pivot]
        projected.append([a - factor * b for a, b in zip(row, unit)])
    canonical, _ = rref(projected)
    return canonical
