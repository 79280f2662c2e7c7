"""
Resultants, discriminants and fraction-free determinants.

Two independent routes to the resultant are provided: the determinant of the
Sylvester matrix (evaluated with Bareiss elimination) and the subresultant
polynomial remainder sequence.  ``resultant`` uses the PRS route by default;
the Sylvester route is kept for cross-checking and for display.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InternalFault
from .poly import UniPoly, _is_zero, exquo, subresultant_resultant


@dataclass(frozen=True)
class SylvesterMatrix:
    """Column layout: ``e`` shifted columns of A's coefficients, then ``d`` of B's.

    Coefficients run from the leading one downwards, so ``entries[k][0]`` for
    ``k = 0..d`` is ``a_0 .. a_d`` with ``a_0`` the leading coefficient.
    """

    entries: tuple
    d: int
    e: int

    @property
    def size(self) -> int:
        return self.d + self.e

    def rows(self) -> list:
        return [list(r) for r in self.entries]


def _pair(A, B, wrt):
    if not isinstance(A, UniPoly) or not isinstance(B, UniPoly):
        raise DomainError("resultant operands must be polynomials")
    if A.var != B.var:
        A, B = A._promote(B)
    if wrt is not None and wrt != A.var:
        raise DomainError(f"elimination variable {wrt!r} is not the outer variable {A.var!r}")
    if A.is_zero or B.is_zero:
        raise DomainError("resultant with the zero polynomial")
    return A, B


def sylvester_matrix(A: UniPoly, B: UniPoly, wrt: str | None = None) -> SylvesterMatrix:
    A, B = _pair(A, B, wrt)
    d, e = A.degree, B.degree
    if d + e == 0:
        raise DomainError("Sylvester matrix of two constants is empty")
    zero = A._zero_coeff() if A.inner_var else B._zero_coeff()
    a = list(reversed(A.coeffs))  # a_0 .. a_d, leading first
    b = list(reversed(B.coeffs))
    n = d + e
    rows = [[zero] * n for _ in range(n)]
    for col in range(e):
        for k, ak in enumerate(a):
            rows[col + k][col] = ak
    for col in range(d):
        for k, bk in enumerate(b):
            rows[col + k][e + col] = bk
    return SylvesterMatrix(tuple(tuple(r) for r in rows), d, e)


def determinant_bareiss(M):
    """Exact determinant by fraction-free Gaussian elimination with row pivoting.

    Entries may be ints, Fractions or UniPoly objects (any mix that shares one
    polynomial ring).  Every division performed is exact.
    """
    rows = [[Fraction(x) if isinstance(x, int) else x for x in row] for row in M]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DomainError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if _is_zero(rows[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(rows[i][k]):
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return rows[k][k] * 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            for j in range(k + 1, n):
                num = rows[i][j] * pivot - rik * rows[k][j]
                try:
                    rows[i][j] = exquo(num, prev)
                except DomainError as exc:
                    raise InternalFault(f"inexact Bareiss division: {exc}") from exc
            rows[i][k] = rows[i][k] * 0
        prev = pivot
    det = rows[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(A: UniPoly, B: UniPoly, wrt: str | None = None, method: str = "subresultant"):
    """Res(A, B) with respect to the outer variable.

    ``method`` is ``"subresultant"`` (default) or ``"sylvester"``.  The result
    is a Fraction, or a UniPoly in the inner variable for bivariate input.
    """
    A, B = _pair(A, B, wrt)
    if method == "subresultant":
        return subresultant_resultant(A, B)
    if method == "sylvester":
        if A.degree == 0 and B.degree == 0:
            return A._one_coeff() if A.inner_var else B._one_coeff()
        return determinant_bareiss(sylvester_matrix(A, B).entries)
    raise DomainError(f"unknown resultant method {method!r}")


def discriminant(A: UniPoly, wrt: str | None = None, method: str = "subresultant"):
    """``(-1)**(d(d-1)/2) / a0 * Res(A, A')``; zero exactly when A has a repeated root."""
    if not isinstance(A, UniPoly):
        raise DomainError("discriminant operand must be a polynomial")
    if wrt is not None and wrt != A.var:
        raise DomainError(f"discriminant variable {wrt!r} is not the outer variable {A.var!r}")
    d = A.degree
    if d < 1:
        raise DomainError("discriminant of a constant polynomial")
    res = resultant(A, A.derivative(A.var), method=method)
    try:
        disc = exquo(res, A.lc)
    except DomainError as exc:
        raise InternalFault(f"leading coefficient does not divide the resultant: {exc}") from exc
    return -disc if (d * (d - 1) // 2) % 2 else disc
