"""Exact square matrices and fraction-free determinants.

det_bareiss is the workhorse; det_cofactor is a deliberately independent
slow oracle used to cross-check it.
"""

from __future__ import annotations

from typing import Sequence

from .ring import Int, RingValue, one_like, zero_like

COFACTOR_MAX = 8  # Laplace expansion is factorial; keep the oracle small.


class SquareMatrix:
    """Immutable n x n matrix whose entries share one ring tag."""

    def __init__(self, rows: Sequence[Sequence[RingValue]]):
        n = len(rows)
        if n == 0:
            raise ValueError("matrix needs at least one row")
        self._rows = tuple(tuple(row) for row in rows)
        if any(len(row) != n for row in self._rows):
            raise ValueError("matrix must be square")
        tag = type(self._rows[0][0])
        for row in self._rows:
            for x in row:
                if type(x) is not tag:
                    raise ValueError("matrix entries must share one ring tag")
        self.n = n

    @classmethod
    def identity(cls, n: int, one: RingValue = Int(1)) -> SquareMatrix:
        zero = zero_like(one)
        return cls(
            [[one if i == j else zero for j in range(n)] for i in range(n)]
        )

    def __getitem__(self, key: tuple[int, int]) -> RingValue:
        i, j = key
        return self._rows[i][j]

    def row(self, i: int) -> tuple[RingValue, ...]:
        return self._rows[i]

    def transpose(self) -> SquareMatrix:
        return SquareMatrix(
            [[self._rows[j][i] for j in range(self.n)] for i in range(self.n)]
        )

    def __matmul__(self, other: SquareMatrix) -> SquareMatrix:
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        n = self.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self._rows[i][0] * other._rows[0][j]
                for k in range(1, n):
                    acc = acc + self._rows[i][k] * other._rows[k][j]
                row.append(acc)
            rows.append(row)
        return SquareMatrix(rows)

    def leading(self, k: int) -> SquareMatrix:
        """Top-left k x k submatrix."""
        if not 1 <= k <= self.n:
            raise ValueError("k out of range")
        return SquareMatrix([row[:k] for row in self._rows[:k]])

    def is_symmetric(self) -> bool:
        return all(
            self._rows[i][j] == self._rows[j][i]
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, SquareMatrix) and self._rows == other._rows

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(x) for x in row) for row in self._rows
        )
        return f"SquareMatrix[{body}]"


def det_bareiss(m: SquareMatrix) -> RingValue:
    """Exact determinant by one-step fraction-free elimination.

    Every division is by the previous pivot and is exact in the entry
    domain; an inexact division raises InexactDivisionError, which means
    the invariant was broken, not that the input was bad.
    """
    n = m.n
    zero = zero_like(m[0, 0])
    prev = one_like(m[0, 0])
    a = [list(m.row(i)) for i in range(n)]
    negate = False
    for k in range(n - 1):
        if a[k][k].is_zero():
            # Deterministic pivot: first lower row with a nonzero entry.
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    negate = not negate
                    break
            else:
                return zero
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - head * row_k[j]).exact_div(prev)
            row_i[k] = zero
        prev = pivot
    d = a[n - 1][n - 1]
    return -d if negate else d


def det_cofactor(m: SquareMatrix) -> RingValue:
    """Determinant by Laplace expansion along the first row; n <= 8 only."""
    if m.n > COFACTOR_MAX:
        raise ValueError(f"cofactor oracle limited to n <= {COFACTOR_MAX}")

    def expand(rows: list[tuple[RingValue, ...]]) -> RingValue:
        if len(rows) == 1:
            return rows[0][0]
        total = None
        first = rows[0]
        rest = rows[1:]
        for j, coeff in enumerate(first):
            if coeff.is_zero():
                continue
            minor = [tuple(row[:j] + row[j + 1 :]) for row in rest]
            term = coeff * expand(minor)
            if j % 2:
                term = -term
            total = term if total is None else total + term
        return zero_like(first[0]) if total is None else total

    return expand([m.row(i) for i in range(m.n)])


def leading_principal_minors(m: SquareMatrix) -> list[RingValue]:
    """Determinants of the k x k top-left submatrices, k = 1..n."""
    return [det_bareiss(m.leading(k)) for k in range(1, m.n + 1)]
