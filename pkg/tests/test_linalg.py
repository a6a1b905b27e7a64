"""Exact elimination: RREF, rank, nullspace, and the incremental row space."""

import random
from fractions import Fraction

from wbext.linalg import RowSpace, nullspace, rank, reduce_mod_rowspace, rref
from wbext.qext import quad


def F(*vals):
    return [Fraction(v) for v in vals]


def test_rref_identity_like():
    rows, pivots = rref([F(2, 0), F(0, 3)], 2)
    assert pivots == [0, 1]
    assert rows == [F(1, 0), F(0, 1)]


def test_rref_drops_zero_and_dependent_rows():
    rows, pivots = rref([F(1, 2, 3), F(2, 4, 6), F(0, 0, 0)], 3)
    assert pivots == [0]
    assert rows == [F(1, 2, 3)]


def test_rank_of_singular_system():
    assert rank([F(1, 1), F(1, 1)], 2) == 1
    assert rank([], 3) == 0


def test_nullspace_annihilates_rows():
    rows = [F(1, 2, 0, -1), F(0, 1, 1, 1)]
    basis = nullspace(rows, 4)
    assert len(basis) == 2
    for vec in basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, vec)) == 0


def test_nullspace_vectors_are_lead_normalized():
    basis = nullspace([F(1, 2)], 2)
    assert len(basis) == 1
    lead = next(c for c in basis[0] if c != 0)
    assert lead == 1


def test_reduce_mod_rowspace_zeroes_pivot_columns():
    rows, pivots = rref([F(1, 0, 2), F(0, 1, -1)], 3)
    red = reduce_mod_rowspace(F(3, 4, 0), rows, pivots)
    assert red[0] == 0 and red[1] == 0
    assert red[2] == -3 * 2 - 4 * (-1) + 0


def test_rowspace_tracks_dimension():
    rs = RowSpace(3)
    assert rs.add(F(1, 1, 0))
    assert not rs.add(F(2, 2, 0))  # dependent
    assert rs.add(F(0, 0, 1))
    assert rs.dim() == 2
    assert rs.contains(F(3, 3, 5))
    assert not rs.contains(F(1, 0, 0))


def test_rank_matches_rowspace_random():
    rng = random.Random(20240813)
    for _ in range(25):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        rows = [
            [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(ncols)]
            for _ in range(nrows)
        ]
        rs = RowSpace(ncols)
        for row in rows:
            rs.add(row)
        assert rs.dim() == rank(rows, ncols)
        # rank-nullity: every nullspace vector is annihilated and counts add up
        null = nullspace(rows, ncols)
        assert len(null) + rank(rows, ncols) == ncols


def test_elimination_over_quadratic_field():
    r19 = quad(0, 1, 19)
    rows = [[r19, Fraction(19)], [Fraction(1), r19]]  # second row = first / sqrt(19)
    assert rank(rows, 2) == 1
    basis = nullspace(rows, 2)
    assert len(basis) == 1
    vec = basis[0]
    assert r19 * vec[0] + 19 * vec[1] == 0


def test_rref_deterministic():
    rows = [F(0, 2, 1), F(1, 1, 1), F(1, 3, 2)]
    first = rref(rows, 3)
    second = rref(rows, 3)
    assert first == second
