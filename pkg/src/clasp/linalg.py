"""Fraction-free linear algebra over the Laurent ring."""

from __future__ import annotations

from typing import Sequence

from .errors import DimensionError, InternalConsistencyError, SingularPresentationError
from .fracfield import RatFunc, as_ratfunc
from .polyring import LaurentPoly, _exact, lcm

Matrix = Sequence[Sequence[LaurentPoly]]


def _square(M: Matrix) -> int:
    n = len(M)
    for row in M:
        if len(row) != n:
            raise DimensionError("matrix is not square")
    return n


def _bareiss(rows: list[list[LaurentPoly]], n: int) -> tuple[int, bool]:
    """In-place Bareiss elimination on the first ``n`` columns of ``rows``.

    Extra columns to the right are carried along, so the entries stay
    minors of the augmented matrix and every division is exact.  Returns
    the sign of the row permutation and whether the leading block is
    nonsingular.
    """
    sign = 1
    mu = rows[0][0].mu
    prev = LaurentPoly.one(mu)
    width = len(rows[0])
    for k in range(n):
        if rows[k][k].is_zero():
            for r in range(k + 1, n):
                if not rows[r][k].is_zero():
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return sign, False
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            row_i, row_k = rows[i], rows[k]
            for j in range(k + 1, width):
                val = row_i[j] * pivot - rik * row_k[j]
                row_i[j] = val if prev == 1 else _exact(val, prev)
            row_i[k] = LaurentPoly.zero(mu)
        prev = pivot
    return sign, True


def det(M: Matrix, mu: int | None = None) -> LaurentPoly:
    """Exact determinant; the empty matrix has determinant 1."""
    n = _square(M)
    if n == 0:
        if mu is None:
            raise DimensionError("variable count needed for an empty matrix")
        return LaurentPoly.one(mu)
    rows = [list(r) for r in M]
    sign, ok = _bareiss(rows, n)
    if not ok:
        return LaurentPoly.zero(rows[0][0].mu)
    return rows[n - 1][n - 1] if sign > 0 else -rows[n - 1][n - 1]


def solve_scaled(M: Matrix, rhs: Sequence[LaurentPoly]) -> tuple[list[LaurentPoly], LaurentPoly]:
    """Solve ``M x = rhs`` without fractions.

    Returns ``(y, d)`` with ``M y = d * rhs`` and ``d = +-det(M)``; then
    ``x = y / d``.  The identity is re-checked before returning.
    """
    n = _square(M)
    if len(rhs) != n:
        raise DimensionError(f"right-hand side has length {len(rhs)}, expected {n}")
    if n == 0:
        return [], None
    cols, d = _solve_columns(M, [list(rhs)])
    return cols[0], d


def inverse_scaled(M: Matrix) -> tuple[list[list[LaurentPoly]], LaurentPoly]:
    """``(Y, d)`` with ``M Y = d I``, so ``M^{-1} = Y / d``."""
    n = _square(M)
    if n == 0:
        return [], None
    mu = M[0][0].mu
    one, zero = LaurentPoly.one(mu), LaurentPoly.zero(mu)
    cols, d = _solve_columns(M, [[one if i == j else zero for i in range(n)] for j in range(n)])
    return [[cols[j][i] for j in range(n)] for i in range(n)], d


def _solve_columns(M: Matrix, columns: list[list[LaurentPoly]]):
    n = len(M)
    mu = M[0][0].mu
    m = len(columns)
    rows = [list(r) + [c[i] for c in columns] for i, r in enumerate(M)]
    _, ok = _bareiss(rows, n)
    if not ok:
        raise SingularPresentationError("matrix is singular")
    d = rows[n - 1][n - 1]
    out = []
    for c in range(m):
        y: list[LaurentPoly] = [LaurentPoly.zero(mu)] * n
        for i in range(n - 1, -1, -1):
            acc = d * rows[i][n + c]
            for j in range(i + 1, n):
                if y[j]:
                    acc = acc - rows[i][j] * y[j]
            y[i] = _exact(acc, rows[i][i])
        for row, b in zip(M, columns[c]):
            lhs = LaurentPoly.zero(mu)
            for a, yj in zip(row, y):
                if a and yj:
                    lhs = lhs + a * yj
            if lhs != d * b:
                raise InternalConsistencyError("residual check failed in fraction-free solve")
        out.append(y)
    return out, d


def clear_denominators(vec: Sequence, mu: int) -> tuple[list[LaurentPoly], LaurentPoly]:
    """Write ``vec`` as ``[p_1, ..., p_n] / common`` with polynomial ``p_i``."""
    fr = [as_ratfunc(x, mu) for x in vec]
    common = LaurentPoly.one(mu)
    for x in fr:
        if x.den != 1 and x.den != common:
            common = lcm(common, x.den)
    return [x.num * _exact(common, x.den) for x in fr], common


def solve(M: Matrix, rhs: Sequence) -> list[RatFunc]:
    """Solve ``M x = rhs`` over the fraction field; ``rhs`` may hold fractions."""
    n = _square(M)
    if len(rhs) != n:
        raise DimensionError(f"right-hand side has length {len(rhs)}, expected {n}")
    if n == 0:
        return []
    numerators, common = clear_denominators(rhs, M[0][0].mu)
    y, d = solve_scaled(M, numerators)
    scale = d * common
    return [RatFunc(yi, scale) for yi in y]


def transpose(M: Matrix) -> list[list]:
    return [list(col) for col in zip(*M)] if M else []


def mat_vec(M: Matrix, v: Sequence):
    out = []
    for row in M:
        acc = 0
        for a, x in zip(row, v):
            acc = a * x + acc
        out.append(acc)
    return out
