"""Exact linear algebra over the rationals: dense solves and an incremental
sparse row-echelon span."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import AlgebraError


def solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve a square system exactly by Gauss-Jordan elimination."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    if len(aug) != n or any(len(row) != n + 1 for row in aug):
        raise AlgebraError("solve needs a square system")
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            raise AlgebraError("singular system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [row[n] for row in aug]


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))] for i in range(len(a))]


class SpanBasis:
    """Rows kept in reduced row-echelon form over sparse coordinates.

    Each row is a dict from column label to nonzero Fraction.  Column order
    is fixed by ``column_key`` so pivots are deterministic.
    """

    def __init__(self, column_key=None):
        self.rows: list[dict] = []
        self.pivots: dict[Hashable, int] = {}
        self.members: list = []
        self._key = column_key if column_key is not None else (lambda c: c)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vector: Mapping[Hashable, Fraction]) -> dict:
        """Remainder of ``vector`` after eliminating every pivot column."""
        vec = {c: Fraction(v) for c, v in vector.items() if v}
        for col in [c for c in vec if c in self.pivots]:
            coeff = vec.get(col)
            if not coeff:
                continue
            for c, v in self.rows[self.pivots[col]].items():
                nv = vec.get(c, 0) - coeff * v
                if nv:
                    vec[c] = nv
                else:
                    vec.pop(c, None)
        return vec

    def contains(self, vector: Mapping[Hashable, Fraction]) -> bool:
        return not self.reduce(vector)

    def add(self, vector: Mapping[Hashable, Fraction], member=None) -> bool:
        """Insert ``vector``; return False if it was already in the span."""
        vec = self.reduce(vector)
        if not vec:
            return False
        col = min(vec, key=self._key)
        p = vec[col]
        vec = {c: v / p for c, v in vec.items()}
        for idx, row in enumerate(self.rows):
            f = row.get(col)
            if f:
                for c, v in vec.items():
                    nv = row.get(c, 0) - f * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
        self.pivots[col] = len(self.rows)
        self.rows.append(vec)
        self.members.append(member)
        return True


def rank(vectors: Iterable[Mapping[Hashable, Fraction]]) -> int:
    span = SpanBasis(column_key=repr)
    for v in vectors:
        span.add(v)
    return span.rank
