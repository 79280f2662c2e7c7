"""
Root finding, numeric eigenvalues and the crossing / exceptional-point pipeline.

Real roots are isolated exactly (Sturm sequences over the rationals, then
bisection with exact endpoints).  Complex roots come from Aberth-Ehrlich
simultaneous iteration in double precision, run on each square-free factor
so that multiple roots never form clusters.  Eigenvalues are computed with the
cyclic Jacobi method.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .elimination import discriminant
from .errors import DomainError, InternalFault, NumericError
from .matrix import DegeneracyProfile, ParametricMatrix, char_poly, degeneracy_profile, reduced_char_poly
from .poly import UniPoly, square_free_decomposition

DEFAULT_LAMBDA_TOL = 1e-12
DEFAULT_GAP_TOL = 1e-8
ABERTH_SEED = 20240611


# -- exact real roots ---------------------------------------------------------

@dataclass(frozen=True)
class RealRoot:
    """A real root isolated in ``[lo, hi]``; ``lo == hi`` marks an exactly located root."""

    lo: Fraction
    hi: Fraction
    value: float
    multiplicity: int = 1

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def _check_rational(A: UniPoly) -> None:
    if not isinstance(A, UniPoly) or A.inner_var is not None:
        raise DomainError("expected a univariate polynomial with rational coefficients")
    if A.is_zero or A.degree < 1:
        raise DomainError("root finding needs a nonconstant polynomial")


def sturm_sequence(f: UniPoly) -> list:
    seq = [f, f.derivative()]
    while not seq[-1].is_zero and seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero:
            break
        seq.append(-r)
    return seq


def _variations(seq, x: Fraction) -> int:
    count, last = 0, 0
    for p in seq:
        v = p(x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


def _cauchy_bound(f: UniPoly) -> Fraction:
    lc = abs(f.lc)
    return 1 + max(abs(c) / lc for c in f.coeffs[:-1]) if f.degree > 0 else Fraction(1)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sturm_real_roots(A: UniPoly, tol=Fraction(1, 10 ** 12)) -> list:
    """All distinct real roots of A, isolated and refined to width ``<= tol``.

    Multiplicities are read off the square-free decomposition of A.
    """
    _check_rational(A)
    tol = Fraction(tol)
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    _, factors = square_free_decomposition(A)
    sqf = UniPoly(A.var, [1])
    for f, _m in factors:
        sqf = sqf * f
    seq = sturm_sequence(sqf)

    def count(a, b):
        return _variations(seq, a) - _variations(seq, b)

    bound = _cauchy_bound(sqf)
    isolated = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        c = count(a, b)
        if c == 0:
            continue
        if c == 1:
            isolated.append((a, b))
            continue
        m = (a + b) / 2
        stack.append((a, m))
        stack.append((m, b))

    roots = []
    for a, b in isolated:
        lo, hi = _refine(sqf, count, a, b, tol)
        mult = next(m for f, m in factors if _root_in(f, lo, hi))
        value = float(lo) if lo == hi else float((lo + hi) / 2)
        roots.append(RealRoot(lo, hi, value, mult))
    roots.sort(key=lambda r: r.lo)
    return roots


def _refine(f: UniPoly, count, lo: Fraction, hi: Fraction, tol: Fraction):
    """Shrink ``(lo, hi]`` holding one simple root until it is at most ``tol`` wide."""
    if f(hi) == 0:
        return hi, hi
    if f(lo) == 0:
        # lo is a neighbouring root outside the interval; step off it
        step = (hi - lo) / 2
        while count(lo, lo + step) != 0 or f(lo + step) == 0:
            step /= 2
        lo = lo + step
    slo = _sign(f(lo))
    while hi - lo > tol:
        m = (lo + hi) / 2
        fm = f(m)
        if fm == 0:
            return m, m
        if _sign(fm) == slo:
            lo = m
        else:
            hi = m
    return lo, hi


def _root_in(f: UniPoly, lo: Fraction, hi: Fraction) -> bool:
    if lo == hi:
        return f(lo) == 0
    return _sign(f(lo)) * _sign(f(hi)) < 0


def count_real_roots(f: UniPoly) -> int:
    """Number of distinct real roots (Sturm count over the whole line)."""
    _check_rational(f)
    _, factors = square_free_decomposition(f)
    total = 0
    for g, _m in factors:
        seq = sturm_sequence(g)
        b = _cauchy_bound(g)
        total += _variations(seq, -b) - _variations(seq, b)
    return total


# -- complex roots -----------------------------------------------------------

@dataclass(frozen=True)
class ComplexRoot:
    value: complex
    residual: float
    multiplicity: int = 1

    @property
    def modulus(self) -> float:
        return abs(self.value)

    @property
    def is_real(self) -> bool:
        return self.value.imag == 0.0


def _relative_residual(c: np.ndarray, z: complex) -> float:
    num = abs(np.polyval(c, z))
    den = np.polyval(np.abs(c), abs(z))
    return float(num / den) if den else float(num)


def aberth(coeffs, tol: float = 1e-15, max_iter: int = 500, seed: int = ABERTH_SEED) -> np.ndarray:
    """Aberth-Ehrlich iteration on a float coefficient vector (highest power first)."""
    c = np.asarray(coeffs, dtype=complex)
    c = c / c[0]
    n = len(c) - 1
    if n < 1:
        raise DomainError("aberth needs degree >= 1")
    if n == 1:
        return np.array([-c[1]])
    dc = np.polyder(c)
    center = -c[1] / n
    radius = 2.0 * max(abs(c[k]) ** (1.0 / k) for k in range(1, n + 1)) + 1e-3
    rng = np.random.default_rng(seed)
    angles = 2 * np.pi * np.arange(n) / n + 0.4 + 0.01 * rng.standard_normal(n)
    z = center + radius * np.exp(1j * angles)
    for _ in range(max_iter):
        p = np.polyval(c, z)
        dp = np.polyval(dc, z)
        dp = np.where(dp == 0, 1e-300, dp)
        ratio = p / dp
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        w = ratio / (1.0 - ratio * s)
        z = z - w
        if np.all(np.abs(w) <= tol * np.maximum(1.0, np.abs(z))):
            return z
    res = [_relative_residual(c, zi) for zi in z]
    if max(res) < 1e-12:
        return z
    raise NumericError(f"Aberth iteration did not converge in {max_iter} steps", residuals=res)


def _conjugate_clean(z: np.ndarray, n_real: int) -> list:
    """Snap the ``n_real`` most nearly real roots onto the axis and pair the rest as conjugates."""
    order = sorted(range(len(z)), key=lambda k: (abs(z[k].imag), k))
    real = [complex(z[k].real, 0.0) for k in order[:n_real]]
    upper = sorted((z[k] for k in order[n_real:] if z[k].imag > 0), key=lambda v: (v.real, v.imag))
    lower = [z[k] for k in order[n_real:] if z[k].imag <= 0]
    out = list(real)
    if len(upper) != len(lower):
        raise NumericError("complex roots of a real polynomial failed to pair into conjugates")
    for u in upper:
        j = min(range(len(lower)), key=lambda k: abs(lower[k] - u.conjugate()))
        v = lower.pop(j)
        m = (u + v.conjugate()) / 2
        out.append(complex(m.real, abs(m.imag)))
        out.append(complex(m.real, -abs(m.imag)))
    return out


def complex_roots(A: UniPoly, tol: float = 1e-15, seed: int = ABERTH_SEED) -> list:
    """All roots of A in the complex plane, one entry per distinct root.

    Each square-free factor of A is solved separately and its roots inherit
    the factor's multiplicity, so the multiplicities sum to ``deg A``.
    Non-real roots come in exact conjugate pairs.
    """
    _check_rational(A)
    _, factors = square_free_decomposition(A)
    out = []
    for f, m in factors:
        c = np.array([float(x) for x in reversed(f.coeffs)])
        z = aberth(c, tol=tol, seed=seed)
        n_real = count_real_roots(f)
        for v in _conjugate_clean(z, n_real):
            out.append(ComplexRoot(v, _relative_residual(c / c[0], v), m))
    out.sort(key=lambda r: (r.value.real, r.value.imag))
    return out


# -- eigenvalues -------------------------------------------------------------

def _off_norm(A: np.ndarray) -> float:
    return float(np.linalg.norm(A - np.diag(np.diag(A))))


def jacobi_eigenvalues(M, tol: float | None = None, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending."""
    A = np.array(M, dtype=float, copy=True)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DomainError("jacobi_eigenvalues needs a square matrix")
    scale = max(1.0, float(np.max(np.abs(A)))) if A.size else 1.0
    if A.size and float(np.max(np.abs(A - A.T))) > 1e-12 * scale:
        raise DomainError("matrix is not symmetric")
    A = (A + A.T) / 2
    n = A.shape[0]
    if tol is None:
        tol = 1e-15 * max(1.0, float(np.linalg.norm(A)))
    for _ in range(max_sweeps):
        off = _off_norm(A)
        if off < tol:
            return np.sort(np.diag(A))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                tau = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                colp = A[:, p].copy()
                colq = A[:, q].copy()
                A[:, p] = c * colp - s * colq
                A[:, q] = s * colp + c * colq
                rowp = A[p, :].copy()
                rowq = A[q, :].copy()
                A[p, :] = c * rowp - s * rowq
                A[q, :] = s * rowp + c * rowq
                A[p, q] = A[q, p] = 0.0
    off = _off_norm(A)
    raise NumericError(f"Jacobi did not converge in {max_sweeps} sweeps", residuals=[off])


# -- crossing classification -------------------------------------------------

@dataclass(frozen=True)
class Crossing:
    """A real discriminant root at which eigenvalues were seen to meet."""

    root: RealRoot
    eigenvalues: tuple
    pairs: tuple      # (i, j) 0-based indices into the ascending spectrum
    clusters: tuple   # ((indices...), mean value) for every group of >= 2 levels

    @property
    def lam(self) -> float:
        return self.root.value


@dataclass(frozen=True)
class ExceptionalPoint:
    root: ComplexRoot

    @property
    def value(self) -> complex:
        return self.root.value

    @property
    def modulus(self) -> float:
        return abs(self.root.value)


@dataclass(frozen=True)
class CrossingReport:
    char_poly: UniPoly
    discriminant_before_reduction: UniPoly
    reduced_poly: UniPoly
    discriminant: UniPoly
    crossings: tuple
    unconfirmed: tuple
    exceptional_points: tuple
    convergence_radius: float | None
    degeneracy: DegeneracyProfile
    lambda_tol: float = DEFAULT_LAMBDA_TOL
    gap_tol: float = DEFAULT_GAP_TOL

    @property
    def identically_zero_before_reduction(self) -> bool:
        return self.discriminant_before_reduction.is_zero


def _as_lambda_poly(x, var: str) -> UniPoly:
    if isinstance(x, UniPoly):
        return x if x.var == var else UniPoly(var, [x.scalar_value()])
    return UniPoly(var, [x])


def _clusters(ev: np.ndarray, gap_tol: float):
    groups, cur = [], [0]
    for k in range(1, len(ev)):
        if ev[k] - ev[k - 1] < gap_tol:
            cur.append(k)
        else:
            groups.append(cur)
            cur = [k]
    if len(ev):
        groups.append(cur)
    return groups


def classify_crossings(H: ParametricMatrix, lambda_tol: float = DEFAULT_LAMBDA_TOL,
                       gap_tol: float = DEFAULT_GAP_TOL) -> CrossingReport:
    """Locate level crossings and exceptional points of ``H(lambda)``.

    The discriminant of the full characteristic polynomial is computed first;
    it vanishes identically whenever levels are degenerate for all lambda.
    The discriminant of the square-free part is then used instead.  Its real
    roots are checked numerically: a root counts as a crossing when the
    number of distinct eigenvalues there drops below the E-degree of the
    square-free part.  Non-real roots are reported as exceptional points; the
    smallest modulus among them is the convergence radius of series in lambda.
    """
    p = char_poly(H)
    d0 = _as_lambda_poly(discriminant(p), H.var)
    q = reduced_char_poly(H)
    n_distinct = q.degree
    if n_distinct >= 1:
        d = _as_lambda_poly(discriminant(q), H.var)
    else:
        d = UniPoly(H.var, [1])
    if d.is_zero:
        raise InternalFault("discriminant vanishes after square-free reduction")

    crossings, unconfirmed, eps = [], [], []
    if d.degree >= 1:
        for root in sturm_real_roots(d, Fraction(lambda_tol)):
            lam = root.lo if root.exact else root.value
            ev = jacobi_eigenvalues(H.eval_at(lam))
            groups = _clusters(ev, gap_tol)
            if len(groups) < n_distinct:
                pairs = tuple((i, j) for i in range(len(ev)) for j in range(i + 1, len(ev))
                              if abs(ev[j] - ev[i]) < gap_tol)
                clusters = tuple((tuple(g), float(np.mean(ev[g]))) for g in groups if len(g) > 1)
                crossings.append(Crossing(root, tuple(float(x) for x in ev), pairs, clusters))
            else:
                unconfirmed.append(root)
        for r in complex_roots(d):
            if not r.is_real:
                eps.append(ExceptionalPoint(r))
    radius = min((e.modulus for e in eps), default=None)
    return CrossingReport(
        char_poly=p,
        discriminant_before_reduction=d0,
        reduced_poly=q,
        discriminant=d,
        crossings=tuple(crossings),
        unconfirmed=tuple(unconfirmed),
        exceptional_points=tuple(eps),
        convergence_radius=radius,
        degeneracy=degeneracy_profile(H),
        lambda_tol=lambda_tol,
        gap_tol=gap_tol,
    )


# -- parameter sweep ---------------------------------------------------------

@dataclass(frozen=True)
class SweepTable:
    lambdas: np.ndarray
    eigenvalues: np.ndarray   # shape (steps, n), rows ascending

    def rows(self):
        for lam, ev in zip(self.lambdas, self.eigenvalues):
            yield float(lam), [float(x) for x in ev]

    def __len__(self):
        return len(self.lambdas)


def sweep(H: ParametricMatrix, lam_min: float, lam_max: float, steps: int,
          workers: int | None = None) -> SweepTable:
    """Eigenvalues on a uniform grid of ``steps`` points including both endpoints.

    With ``workers > 1`` rows are computed in a thread pool; the result is
    identical to the sequential one.
    """
    if steps < 2:
        raise DomainError("a sweep needs at least two steps")
    if not lam_min < lam_max:
        raise DomainError("sweep range must satisfy lam_min < lam_max")
    grid = np.linspace(float(lam_min), float(lam_max), int(steps))

    def row(lam):
        return jacobi_eigenvalues(H.eval_at(float(lam)))

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, grid))
    else:
        rows = [row(lam) for lam in grid]
    return SweepTable(grid, np.vstack(rows))
