"""
Real symmetric matrices whose entries are polynomials in one parameter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .elimination import determinant_bareiss
from .errors import ValidationError
from .poly import UniPoly, square_free_decomposition, square_free_part, to_rational


@dataclass(frozen=True)
class ParametricMatrix:
    """Symmetric ``n x n`` matrix with ``UniPoly`` entries in ``var``.

    Use :func:`build` (1-based indices, mirrored entries) rather than the
    constructor unless you already hold a full symmetric entry table.
    """

    n: int
    entries: tuple
    var: str = "lambda"

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValidationError(f"entry table is not {self.n}x{self.n}")
        for i in range(self.n):
            for j in range(self.n):
                e = self.entries[i][j]
                if not isinstance(e, UniPoly) or (e.var != self.var and not e.is_constant()):
                    raise ValidationError(f"entry ({i + 1},{j + 1}) is not a polynomial in {self.var!r}")
                if e.inner_var is not None:
                    raise ValidationError(f"entry ({i + 1},{j + 1}) must have rational coefficients")
                if self.entries[j][i] != e:
                    raise ValidationError(f"matrix is not symmetric at ({i + 1},{j + 1})")

    def __getitem__(self, ij) -> UniPoly:
        i, j = ij
        return self.entries[i][j]

    @property
    def max_degree(self) -> int:
        return max((max(e.degree, 0) for row in self.entries for e in row), default=0)

    def coefficient_matrices(self) -> list:
        """Exact matrices ``H_k`` with ``H(lambda) = sum_k lambda**k H_k`` (Fraction entries)."""
        out = []
        for k in range(self.max_degree + 1):
            out.append([
                [e.coeffs[k] if k < len(e.coeffs) else Fraction(0) for e in row]
                for row in self.entries
            ])
        return out

    def freeze(self, value) -> "ParametricMatrix":
        """Substitute an exact parameter value, keeping the result as constant polynomials."""
        v = to_rational(value)
        return ParametricMatrix(
            self.n,
            tuple(tuple(UniPoly(self.var, [e(v)]) for e in row) for row in self.entries),
            self.var,
        )

    def eval_at(self, value) -> np.ndarray:
        """Numeric ``H(value)`` as a float array.

        Exact values (int, Fraction, "p/q") are substituted exactly and then
        rounded once; floats are evaluated in double precision.
        """
        if isinstance(value, float):
            out = np.zeros((self.n, self.n))
            for i, row in enumerate(self.entries):
                for j, e in enumerate(row):
                    acc = 0.0
                    for c in reversed(e.coeffs):
                        acc = acc * value + float(c)
                    out[i, j] = acc
            return out
        v = to_rational(value)
        return np.array([[float(e(v)) for e in row] for row in self.entries], dtype=float).reshape(self.n, self.n)


def build(n: int, entries: Mapping | None = None, var: str = "lambda") -> ParametricMatrix:
    """Build a symmetric matrix from ``{(i, j): coefficient list}`` with 1-based indices.

    Coefficient lists run from the constant term upwards.  Missing entries are
    zero and each given ``(i, j)`` is mirrored to ``(j, i)``.  If both
    ``(i, j)`` and ``(j, i)`` are given they must agree.
    """
    if n < 1:
        raise ValidationError(f"dimension must be positive, got {n}")
    table = [[UniPoly(var) for _ in range(n)] for _ in range(n)]
    given = {}
    for (i, j), coeffs in (entries or {}).items():
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValidationError(f"entry ({i},{j}) is outside a {n}x{n} matrix")
        try:
            p = UniPoly(var, coeffs)
        except Exception as exc:
            raise ValidationError(f"entry ({i},{j}): {exc}") from exc
        mirror = given.get((j, i))
        if mirror is not None and mirror != p:
            raise ValidationError(
                f"conflicting entries ({i},{j}) = {p} and ({j},{i}) = {mirror}"
            )
        given[(i, j)] = p
        table[i - 1][j - 1] = p
        table[j - 1][i - 1] = p
    return ParametricMatrix(n, tuple(tuple(r) for r in table), var)


def block_diagonal(*blocks: ParametricMatrix) -> ParametricMatrix:
    var = blocks[0].var
    n = sum(b.n for b in blocks)
    table = [[UniPoly(var) for _ in range(n)] for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.n):
            for j in range(b.n):
                table[off + i][off + j] = b.entries[i][j]
        off += b.n
    return ParametricMatrix(n, tuple(tuple(r) for r in table), var)


def _as_bipoly(P, outer: str, inner: str) -> UniPoly:
    if isinstance(P, UniPoly) and P.var == outer and P.inner_var == inner:
        return P
    if isinstance(P, UniPoly) and P.var == outer:
        return UniPoly(outer, [UniPoly(inner, [c]) for c in P.coeffs] or [UniPoly(inner)])
    if isinstance(P, UniPoly) and P.var == inner:
        return UniPoly(outer, [P])
    return UniPoly(outer, [UniPoly(inner, [P])])


def char_poly(H: ParametricMatrix, var: str = "E") -> UniPoly:
    """``(-1)**n * det(H - E*I)``: monic in E, coefficients in ``Q[lambda]``."""
    rows = []
    for i in range(H.n):
        row = []
        for j in range(H.n):
            h = H.entries[i][j]
            row.append(UniPoly(var, [h, -1] if i == j else [h]))
        rows.append(row)
    det = _as_bipoly(determinant_bareiss(rows), var, H.var)
    return -det if H.n % 2 else det


def reduced_char_poly(H: ParametricMatrix, var: str = "E") -> UniPoly:
    """Square-free part in E of the characteristic polynomial."""
    return _as_bipoly(square_free_part(char_poly(H, var)), var, H.var)


@dataclass(frozen=True)
class Branch:
    factor: UniPoly
    multiplicity: int
    degree: int


@dataclass(frozen=True)
class DegeneracyProfile:
    """Square-free factors of the characteristic polynomial with their multiplicities."""

    branches: tuple
    unit: object = Fraction(1)

    @property
    def persistent_degeneracy(self) -> bool:
        return any(b.multiplicity >= 2 for b in self.branches)


def degeneracy_profile(H: ParametricMatrix, var: str = "E") -> DegeneracyProfile:
    unit, factors = square_free_decomposition(char_poly(H, var))
    return DegeneracyProfile(
        tuple(Branch(_as_bipoly(f, var, H.var), m, f.degree) for f, m in factors),
        unit,
    )
