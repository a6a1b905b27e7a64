"""Exact Gaussian elimination over any field with Python operator support.

Rows are plain lists of field elements (``Fraction``, ``QuadExt`` or the
scanner's rational-function type).  Everything is deterministic: pivots are
chosen leftmost-column, topmost-row, so repeated runs give identical bases.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["rref", "rank", "nullspace", "reduce_mod_rowspace", "RowSpace"]


def rref(rows, ncols: int):
    """Reduced row-echelon form.  Returns ``(rref_rows, pivot_cols)``.

    Zero rows are dropped; input rows are not mutated.
    """
    work = [list(r) for r in rows if any(c != 0 for c in r)]
    pivots: list[int] = []
    out: list[list] = []
    row_idx = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(row_idx, len(work)):
            if work[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[row_idx], work[pivot_row] = work[pivot_row], work[row_idx]
        pr = work[row_idx]
        if pr[col] != 1:
            pr = [c / pr[col] for c in pr]
            work[row_idx] = pr
        for i in range(len(work)):
            if i == row_idx:
                continue
            factor = work[i][col]
            if factor != 0:
                # skip untouched columns; rows stay sparse for most of the sweep
                work[i] = [a - factor * b if b else a for a, b in zip(work[i], pr)]
        pivots.append(col)
        row_idx += 1
        if row_idx == len(work):
            break
    out = [r for r in work[: len(pivots)]]
    return out, pivots


def rank(rows, ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols: int):
    """Canonical nullspace basis.

    One vector per free column, ordered by free-column index; each vector is
    scaled so its first nonzero coordinate equals 1.
    """
    rr, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for prow, pcol in zip(rr, pivots):
            if prow[fc] != 0:
                vec[pcol] = -prow[fc]
        basis.append(_normalize_lead(vec))
    return basis


def _normalize_lead(vec):
    for c in vec:
        if c != 0:
            return [x / c for x in vec]
    return vec


def reduce_mod_rowspace(vec, rr, pivots):
    """Reduce ``vec`` against an RREF row space; the result has zeros at pivots."""
    out = list(vec)
    for prow, pcol in zip(rr, pivots):
        factor = out[pcol]
        if factor != 0:
            out = [a - factor * b for a, b in zip(out, prow)]
    return out


class RowSpace:
    """Incrementally maintained RREF row space, used for greedy basis extension."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list] = []
        self.pivots: list[int] = []

    def reduce(self, vec):
        return reduce_mod_rowspace(vec, self.rows, self.pivots)

    def add(self, vec) -> bool:
        """Insert ``vec`` if independent of the current span.  Returns True if added."""
        red = self.reduce(vec)
        lead = None
        for i, c in enumerate(red):
            if c != 0:
                lead = i
                break
        if lead is None:
            return False
        red = [c / red[lead] for c in red]
        for row in self.rows:
            if row[lead] != 0:
                factor = row[lead]
                row[:] = [a - factor * b for a, b in zip(row, red)]
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < lead:
            pos += 1
        self.rows.insert(pos, red)
        self.pivots.insert(pos, lead)
        return True

    def dim(self) -> int:
        return len(self.rows)

    def contains(self, vec) -> bool:
        return all(c == 0 for c in self.reduce(vec))
