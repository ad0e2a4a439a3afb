from fractions import Fraction
from random import Random

import pytest

from foldef import linalg
from foldef.scalars import make_scalar

from oracles import naive_nullspace, naive_rank, naive_rref


def _random_matrix(rng, rows, cols, gaussian=False):
    out = []
    for _ in range(rows):
        row = []
        for _ in range(cols):
            value = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
            if gaussian and rng.random() < 0.3:
                value = make_scalar(value, rng.randint(-2, 2))
            row.append(value)
        out.append(row)
    return out


def test_rref_matches_naive_oracle():
    rng = Random(101)
    for _ in range(60):
        m = _random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        ours, pivots = linalg.rref(m)
        theirs, their_pivots = naive_rref(m)
        assert [list(r) for r in ours] == theirs
        assert list(pivots) == their_pivots


def test_rref_matches_naive_oracle_gaussian_entries():
    rng = Random(103)
    for _ in range(40):
        m = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5), gaussian=True)
        ours, _ = linalg.rref(m)
        theirs, _ = naive_rref(m)
        assert [list(r) for r in ours] == theirs


def test_rref_idempotent_and_canonical():
    rng = Random(107)
    for _ in range(40):
        m = _random_matrix(rng, 4, 5)
        once, _ = linalg.rref(m)
        twice, _ = linalg.rref([list(r) for r in once])
        assert once == twice
        # scaling rows does not change the canonical form
        scaled = [[v * Fraction(3, 7) for v in row] for row in m]
        assert linalg.rref(scaled)[0] == once


def test_nullspace_vectors_annihilate():
    rng = Random(109)
    for _ in range(50):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = _random_matrix(rng, rows, cols)
        basis = linalg.nullspace(m, cols)
        for v in basis:
            for row in m:
                assert sum((a * b for a, b in zip(row, v)), Fraction(0)) == 0
        assert len(basis) == cols - linalg.rank(m)
        # span agreement with the naive path
        naive = naive_nullspace(m, cols)
        assert naive_rank(naive) == len(basis)
        assert naive_rank(naive + [list(v) for v in basis]) == len(basis)


def test_solve():
    m = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]
    assert linalg.solve(m, [Fraction(5), Fraction(11)], 2) == (Fraction(1), Fraction(2))
    inconsistent = [[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]]
    assert linalg.solve(inconsistent, [Fraction(1), Fraction(3)], 2) is None
    underdetermined = [[Fraction(1), Fraction(1)]]
    solution = linalg.solve(underdetermined, [Fraction(2)], 2)
    assert solution == (Fraction(2), Fraction(0))  # free variable pinned to 0


def test_line_complement():
    rows, _ = linalg.rref([[1, 0, 1], [0, 1, 1]])
    complement = linalg.line_complement(rows, (Fraction(1), Fraction(1), Fraction(2)))
    assert len(complement) == 1
    # every complement vector has a zero in the line's pivot coordinate
    assert complement[0][0] == 0
    with pytest.raises(ValueError):
        linalg.line_complement(rows, (Fraction(0), Fraction(0), Fraction(0)))


def test_in_row_space():
    rows, pivots = linalg.rref([[1, 2, 3], [0, 1, 1]])
    assert linalg.in_row_space(rows, pivots, (Fraction(1), Fraction(3), Fraction(4)))
    assert not linalg.in_row_space(rows, pivots, (Fraction(0), Fraction(0), Fraction(1)))


def test_rref_low_rank_stress():
    # larger matrices built from few independent rows force many swap /
    # dependent-row paths through the fraction-free elimination
    rng = Random(211)
    for _ in range(15):
        cols = rng.randint(6, 12)
        seeds = _random_matrix(rng, rng.randint(2, 4), cols)
        rows = []
        for _ in range(rng.randint(8, 14)):
            combo = [Fraction(0)] * cols
            for seed_row in seeds:
                c = Fraction(rng.randint(-3, 3))
                combo = [a + c * b for a, b in zip(combo, seed_row)]
            rows.append(combo)
        ours, _ = linalg.rref(rows)
        theirs, _ = naive_rref(rows)
        assert [list(r) for r in ours] == theirs
        assert len(ours) <= len(seeds)
        basis = linalg.nullspace(rows, cols)
        assert len(basis) == cols - len(ours)
        for v in basis:
            for row in rows:
                assert sum((a * b for a, b in zip(row, v)), Fraction(0)) == 0
