"""Smith normal form over the integers, with transforms.

Matrices are lists of rows of Python ints, so entries never overflow.
"""
from __future__ import annotations

from dataclasses import dataclass


def identity(n: int) -> list:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: list, B: list) -> list:
    if not A:
        return []
    cols = len(B[0]) if B else 0
    return [[sum(a * B[k][j] for k, a in enumerate(row) if a) for j in range(cols)] for row in A]


def matvec(A: list, x: list) -> list:
    return [sum(a * b for a, b in zip(row, x) if a) for row in A]


@dataclass
class SmithForm:
    """``U @ A @ V == D`` with ``D`` diagonal, ``diag`` its nonzero part.

    ``U`` is ``m x m`` and ``V`` is ``n x n``, both unimodular.  ``diag`` lists
    the invariant factors in divisibility order, all positive.
    """

    rows: int
    cols: int
    diag: list
    U: list
    V: list

    @property
    def rank(self) -> int:
        return len(self.diag)

    def solve(self, b: list):
        """An integer ``x`` with ``A x = b``, or None if none exists."""
        if len(b) != self.rows:
            raise ValueError(f"right-hand side has length {len(b)}, expected {self.rows}")
        c = matvec(self.U, b)
        y = [0] * self.cols
        for i, d in enumerate(self.diag):
            q, r = divmod(c[i], d)
            if r:
                return None
            y[i] = q
        if any(c[self.rank:]):
            return None
        return matvec(self.V, y)


def smith_normal_form(A: list, rows: int | None = None, cols: int | None = None) -> SmithForm:
    """Reduce ``A`` to Smith normal form by elementary row and column operations.

    ``rows``/``cols`` give the shape when ``A`` has no rows or empty rows.
    """
    m = len(A) if rows is None else rows
    n = (len(A[0]) if A else 0) if cols is None else cols
    M = [list(map(int, row)) for row in A] if m else []
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row[dst] += q * row[src]
        M[dst] = [a + q * b for a, b in zip(M[dst], M[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        for row in M:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = M[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if M[i][t]:
                    q = M[i][t] // M[t][t]
                    add_row(t, i, -q)
                    if M[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if M[t][j]:
                    q = M[t][j] // M[t][t]
                    add_col(t, j, -q)
                    if M[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            p = M[t][t]
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if M[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if M[t][t] < 0:
            M[t] = [-a for a in M[t]]
            U[t] = [-a for a in U[t]]
        diag.append(M[t][t])
        t += 1
    return SmithForm(m, n, diag, U, V)
