"""Small exact linear algebra over Q.

Rows are dicts ``{column: Fraction}``; dense lists are accepted and converted.
Intended for systems with at most a few hundred columns. The large systems
behind normal forms go through python-flint instead (see :mod:`relfree`).
"""

from __future__ import annotations

from fractions import Fraction


def _sparse(row):
    if isinstance(row, dict):
        return {c: Fraction(v) for c, v in row.items() if v}
    return {c: Fraction(v) for c, v in enumerate(row) if v}


class Echelon:
    """Incremental row echelon form; pivots are kept fully reduced."""

    def __init__(self):
        self.pivots = {}  # pivot column -> row (pivot entry 1)

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, row):
        row = dict(row)
        for col, prow in self.pivots.items():
            c = row.get(col)
            if c:
                for k, v in prow.items():
                    s = row.get(k, 0) - c * v
                    if s:
                        row[k] = s
                    else:
                        row.pop(k, None)
        return row

    def add(self, row) -> bool:
        """Insert a row; returns True if it increased the rank."""
        row = self.reduce(_sparse(row))
        if not row:
            return False
        col = min(row)
        inv = 1 / row[col]
        row = {k: v * inv for k, v in row.items()}
        for prow in self.pivots.values():
            c = prow.get(col)
            if c:
                for k, v in row.items():
                    s = prow.get(k, 0) - c * v
                    if s:
                        prow[k] = s
                    else:
                        prow.pop(k, None)
        self.pivots[col] = row
        return True


def rank(rows) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def solve(rows, rhs, ncols):
    """Return one solution ``x`` (list of Fractions) of ``A x = rhs`` or None.

    Free variables are set to zero.
    """
    aug = ncols
    ech = Echelon()
    for r, b in zip(rows, rhs):
        r = _sparse(r)
        if b:
            r[aug] = Fraction(b)
        ech.add(r)
    if aug in ech.pivots:
        return None
    x = [Fraction(0)] * ncols
    for col, prow in ech.pivots.items():
        x[col] = prow.get(aug, Fraction(0))
    return x
