"""
Exact polynomial algebra over the rationals.

Coefficients are :class:`fractions.Fraction` (aliased as ``Rational``).  A
:class:`UniPoly` stores its coefficients densely, lowest power first.  A
polynomial whose coefficients are themselves ``UniPoly`` objects in a second
variable plays the role of a bivariate polynomial: ``p(E, lambda)`` is a
``UniPoly`` in ``"E"`` whose coefficients are ``UniPoly`` objects in
``"lambda"``.  The helper :func:`bipoly` builds such objects.

Normalization conventions
-------------------------
* The zero polynomial has an empty coefficient tuple and degree
  :data:`ZERO_DEGREE` (``-inf``), so ``deg(A*B) == deg A + deg B`` holds
  without special cases.
* Primitive parts (over ``Q``) have coprime integer coefficients and a
  positive leading coefficient.  For polynomials over ``Q[lambda]`` the
  primitive part has no nonconstant common factor in ``lambda``, coprime
  integer leaf coefficients, and the leading coefficient of its leading
  inner polynomial is positive.
* ``gcd``, ``square_free_part`` and the factors of
  ``square_free_decomposition`` are returned in that primitive form.

Example:
    >>> x = UniPoly("x", [0, 1])
    >>> (x + 1) * (x - 1)
    UniPoly('x', [-1, 0, 1])
    >>> gcd(x**2 - 1, x - 1)
    UniPoly('x', [-1, 1])
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

from .errors import DomainError

Rational = Fraction
ZERO_DEGREE = -math.inf

Scalar = Union[int, Fraction]


def to_rational(value) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a canonical Fraction.

    Floats and booleans are rejected: this module never touches inexact numbers.
    """
    if isinstance(value, bool):
        raise DomainError(f"not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            n = int(num)
            d = int(den) if sep else 1
        except ValueError:
            raise DomainError(f"not a rational number: {value!r}") from None
        if d == 0:
            raise DomainError(f"zero denominator in {value!r}")
        return Fraction(n, d)
    raise DomainError(f"not a rational number: {value!r}")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _is_zero(c) -> bool:
    if isinstance(c, UniPoly):
        return not c.coeffs
    return c == 0


def _coerce(c):
    if isinstance(c, UniPoly):
        return c
    return to_rational(c)


def exquo(a, b):
    """Exact quotient ``a / b`` of two ring elements (Fraction or UniPoly)."""
    if isinstance(a, UniPoly):
        return a.exquo(b)
    if isinstance(b, UniPoly):
        if b.degree != 0:
            if _is_zero(a):
                return Fraction(0)
            raise DomainError("scalar is not divisible by a nonconstant polynomial")
        return exquo(a, b.coeffs[0])
    if b == 0:
        raise DomainError("division by zero")
    return Fraction(a) / b


class UniPoly:
    """Dense univariate polynomial; coefficients are Fractions or UniPolys.

    Instances are immutable and hashable.  ``coeffs[k]`` is the coefficient of
    ``var**k``.
    """

    __slots__ = ("var", "coeffs", "inner_var")

    def __init__(self, var: str, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        inner = {c.var for c in cs if isinstance(c, UniPoly)}
        if len(inner) > 1:
            raise DomainError(f"coefficients mix variables {sorted(inner)}")
        inner_var = inner.pop() if inner else None
        if inner_var == var:
            raise DomainError(f"coefficient variable equals outer variable {var!r}")
        if inner_var is not None:
            cs = [c if isinstance(c, UniPoly) else UniPoly(inner_var, [c]) for c in cs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "inner_var", inner_var)

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    # -- construction helpers -------------------------------------------------
    @classmethod
    def constant(cls, var: str, value) -> "UniPoly":
        return cls(var, [value])

    @classmethod
    def monomial(cls, var: str, power: int, coeff=1) -> "UniPoly":
        return cls(var, [0] * power + [coeff])

    def _like(self, coeffs) -> "UniPoly":
        return UniPoly(self.var, coeffs)

    # -- queries --------------------------------------------------------------
    @property
    def degree(self):
        """Degree in ``var``; :data:`ZERO_DEGREE` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        if not self.coeffs:
            return self._zero_coeff()
        return self.coeffs[-1]

    @property
    def const(self):
        return self.coeffs[0] if self.coeffs else self._zero_coeff()

    def _zero_coeff(self):
        return UniPoly(self.inner_var) if self.inner_var else Fraction(0)

    def _one_coeff(self):
        return UniPoly(self.inner_var, [1]) if self.inner_var else Fraction(1)

    @property
    def variables(self) -> tuple:
        return (self.var,) if self.inner_var is None else (self.var, self.inner_var)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def scalar_value(self):
        """Return the Fraction value of a polynomial that is constant in every variable."""
        c = self.const
        if isinstance(c, UniPoly):
            if not c.is_constant():
                raise DomainError("polynomial is not constant")
            return c.scalar_value()
        if not self.is_constant():
            raise DomainError("polynomial is not constant")
        return c

    # -- equality / hashing ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.const == other
        if not isinstance(other, UniPoly):
            return NotImplemented
        if other.var == self.var:
            return len(self.coeffs) == len(other.coeffs) and all(
                a == b for a, b in zip(self.coeffs, other.coeffs)
            )
        if self.is_constant() and other.is_constant():
            return self.const == other.const
        if other.var == self.inner_var and self.is_constant():
            return self.const == other
        if self.var == other.inner_var and other.is_constant():
            return other.const == self
        return False

    def __hash__(self):
        if self.is_constant():
            c = self.const
            return hash(c)
        return hash((self.var, self.coeffs))

    # -- arithmetic -----------------------------------------------------------
    def _as_scalar(self, other):
        """Interpret ``other`` as a coefficient-ring element, or return None if it is a peer."""
        if isinstance(other, bool):
            raise DomainError("booleans are not polynomials")
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        if not isinstance(other, UniPoly):
            raise DomainError(f"cannot combine UniPoly with {type(other).__name__}")
        if other.var == self.var:
            return None
        if other.var == self.inner_var:
            return other
        if self.var == other.inner_var:
            return None
        if other.is_constant():
            return other.const
        if self.is_constant():
            return None
        raise DomainError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def _promote(self, other):
        """Return (left, right) so both are UniPolys in the same outer variable."""
        if other.var == self.var:
            return self, other
        if self.var == other.inner_var:
            return UniPoly(other.var, [self]), other
        if self.is_constant():
            return UniPoly(other.var, [self.const]), other
        raise DomainError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other):
        s = self._as_scalar(other)
        if s is not None:
            cs = list(self.coeffs) or [self._zero_coeff()]
            cs[0] = cs[0] + s
            return self._like(cs)
        a, b = self._promote(other)
        n = max(len(a.coeffs), len(b.coeffs))
        zero = Fraction(0)
        return UniPoly(a.var, [
            (a.coeffs[k] if k < len(a.coeffs) else zero) + (b.coeffs[k] if k < len(b.coeffs) else zero)
            for k in range(n)
        ])

    __radd__ = __add__

    def __neg__(self):
        return self._like([-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        s = self._as_scalar(other)
        if s is not None:
            if _is_zero(s):
                return self._like([])
            return self._like([c * s for c in self.coeffs])
        a, b = self._promote(other)
        if a.is_zero or b.is_zero:
            return UniPoly(a.var)
        out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ai in enumerate(a.coeffs):
            if _is_zero(ai):
                continue
            for j, bj in enumerate(b.coeffs):
                out[i + j] = out[i + j] + ai * bj
        return UniPoly(a.var, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise DomainError("polynomial powers must be non-negative integers")
        result = self._like([1]) if self.inner_var is None else self._like([self._one_coeff()])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, value):
        """Horner evaluation at ``value`` (scalar or polynomial)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def evaluate(self, value):
        return self(value)

    def map_coeffs(self, fn) -> "UniPoly":
        return self._like([fn(c) for c in self.coeffs])

    def eval_inner(self, value) -> "UniPoly":
        """Specialize the inner variable at ``value``; the outer variable is kept."""
        return UniPoly(self.var, [c(value) if isinstance(c, UniPoly) else c for c in self.coeffs])

    def derivative(self, wrt: str | None = None) -> "UniPoly":
        wrt = self.var if wrt is None else wrt
        if wrt == self.var:
            return self._like([c * k for k, c in enumerate(self.coeffs)][1:])
        if wrt == self.inner_var:
            return self._like([c.derivative(wrt) for c in self.coeffs])
        return self._like([])

    # -- division -------------------------------------------------------------
    def divmod(self, other) -> tuple["UniPoly", "UniPoly"]:
        """Euclidean division; requires the divisor's leading coefficient to divide exactly."""
        s = self._as_scalar(other)
        if s is not None:
            return self._like([exquo(c, s) for c in self.coeffs]), self._like([])
        a, b = self._promote(other)
        if b.is_zero:
            raise DomainError("polynomial division by zero")
        rem = list(a.coeffs)
        db = len(b.coeffs) - 1
        quo = [Fraction(0)] * max(len(rem) - db, 0)
        lcb = b.coeffs[-1]
        while len(rem) - 1 >= db and rem:
            shift = len(rem) - 1 - db
            t = exquo(rem[-1], lcb)
            quo[shift] = t
            for k, bk in enumerate(b.coeffs):
                rem[shift + k] = rem[shift + k] - t * bk
            rem.pop()
            while rem and _is_zero(rem[-1]):
                rem.pop()
        return UniPoly(a.var, quo), UniPoly(a.var, rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exquo(self, other) -> "UniPoly":
        """Exact division; raises DomainError if ``other`` does not divide ``self``."""
        q, r = self.divmod(other)
        if not r.is_zero:
            raise DomainError("inexact polynomial division")
        return q

    def __truediv__(self, other):
        return self.exquo(other)

    def prem(self, other: "UniPoly") -> "UniPoly":
        """Pseudo-remainder ``lc(other)**(deg self - deg other + 1) * self mod other``.

        Uses only ring operations, so it is valid over ``Q[lambda]``.
        """
        if other.is_zero:
            raise DomainError("pseudo-remainder by zero")
        db = other.degree
        if self.degree < db:
            return self
        lcb = other.lc
        e = self.degree - db + 1
        r = self
        while not r.is_zero and r.degree >= db:
            t = UniPoly.monomial(self.var, r.degree - db, r.lc)
            r = r * lcb - t * other
            e -= 1
        return r * (lcb ** e) if e else r

    # -- presentation ---------------------------------------------------------
    def __repr__(self):
        def rc(c):
            return repr(c) if isinstance(c, UniPoly) else format_rational(c)
        body = ", ".join(rc(c) for c in self.coeffs)
        return f"UniPoly({self.var!r}, [{body}])"

    def __str__(self):
        return self.to_string()

    def to_string(self, names: dict | None = None) -> str:
        """Descending-power rendering, e.g. ``E^4 - (2*l^2 + l + 2)*E^2 + ...``."""
        names = names or {}
        name = names.get(self.var, self.var)
        if self.is_zero:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if _is_zero(c):
                continue
            mono = "" if k == 0 else (name if k == 1 else f"{name}^{k}")
            if isinstance(c, UniPoly):
                nonzero = [x for x in c.coeffs if not _is_zero(x)]
                if len(nonzero) == 1:
                    inner = c.to_string(names)
                    neg = inner.startswith("-")
                    body = inner[1:] if neg else inner
                    if body == "1" and mono:
                        body = ""
                else:
                    neg = False
                    body = f"({c.to_string(names)})"
            else:
                neg = c < 0
                body = format_rational(abs(c))
                if body == "1" and mono:
                    body = ""
            term = "*".join(x for x in (body, mono) if x)
            parts.append((neg, term))
        first_neg, first = parts[0]
        out = ("-" if first_neg else "") + first
        for neg, term in parts[1:]:
            out += (" - " if neg else " + ") + term
        return out


def bipoly(coeff_lists, outer: str = "E", inner: str = "lambda") -> UniPoly:
    """Build a polynomial in ``outer`` whose k-th coefficient is ``UniPoly(inner, coeff_lists[k])``."""
    return UniPoly(outer, [UniPoly(inner, cs) for cs in coeff_lists] or [UniPoly(inner)])


def eval_bipoly_at_lambda(P: UniPoly, value) -> UniPoly:
    """Specialize the inner variable of a bivariate polynomial at an exact value."""
    return P.eval_inner(to_rational(value) if not isinstance(value, UniPoly) else value)


def derivative(A: UniPoly, wrt: str | None = None) -> UniPoly:
    return A.derivative(wrt)


# -- content, primitive part, normalization ----------------------------------

def _rational_content(values) -> Fraction:
    """gcd of numerators over lcm of denominators for a list of Fractions (nonnegative)."""
    num = 0
    den = 1
    for v in values:
        num = math.gcd(num, v.numerator)
        den = den * v.denominator // math.gcd(den, v.denominator)
    return Fraction(num, den)


def _leaves(A) -> list:
    if isinstance(A, UniPoly):
        out = []
        for c in A.coeffs:
            out.extend(_leaves(c))
        return out
    return [A]


def _leading_leaf(A):
    while isinstance(A, UniPoly):
        A = A.lc
    return A


def unit_normal(A: UniPoly) -> UniPoly:
    """Scale by a rational so leaf coefficients are coprime integers and the leading leaf is positive."""
    if A.is_zero:
        return A
    c = _rational_content(_leaves(A))
    if _leading_leaf(A) < 0:
        c = -c
    return A * (1 / c)


def content_and_primitive(A: UniPoly):
    """Split ``A = content * primitive``.

    Over ``Q`` the content is a Fraction carrying the sign of the leading
    coefficient, so ``content_and_primitive(-3x) == (-3, x)``.  Over
    ``Q[lambda]`` the content is a ``UniPoly`` in the inner variable.
    """
    if A.is_zero:
        raise DomainError("content of the zero polynomial")
    if A.inner_var is None:
        c = _rational_content(A.coeffs)
        if A.lc < 0:
            c = -c
        return c, A * (1 / c)
    g = reduce(lambda x, y: gcd(x, y), [c for c in A.coeffs if not c.is_zero])
    B = A.exquo(g)
    r = _rational_content(_leaves(B))
    if _leading_leaf(B) < 0:
        r = -r
    return g * r, B * (1 / r)


def primitive_part(A: UniPoly) -> UniPoly:
    return content_and_primitive(A)[1]


# -- gcd and subresultant machinery ------------------------------------------

def _as_poly(A, var: str | None) -> UniPoly:
    if isinstance(A, UniPoly):
        return A
    if var is None:
        raise DomainError("scalar operand needs an explicit variable")
    return UniPoly(var, [A])


def _check_wrt(A: UniPoly, wrt: str | None) -> str:
    if wrt is None:
        return A.var
    if wrt != A.var:
        if A.is_constant():
            return wrt
        raise DomainError(f"operation is with respect to the outer variable {A.var!r}, got {wrt!r}")
    return wrt


def _ring_one(A: UniPoly):
    return A._one_coeff()


def _subresultant_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """gcd of two primitive polynomials via the subresultant PRS (up to a content factor)."""
    if a.degree < b.degree:
        a, b = b, a
    if b.is_zero:
        return a
    g = h = _ring_one(a)
    while True:
        delta = a.degree - b.degree
        r = a.prem(b)
        if r.is_zero:
            return b
        if r.degree == 0:
            return UniPoly(a.var, [_ring_one(a)])
        a, b = b, r.exquo(g * h ** delta)
        g = a.lc
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = exquo(g ** delta, h ** (delta - 1))


def gcd(A, B, wrt: str | None = None) -> UniPoly:
    """Greatest common divisor with respect to the outer variable, in primitive form."""
    var = A.var if isinstance(A, UniPoly) else (B.var if isinstance(B, UniPoly) else wrt)
    A = _as_poly(A, var)
    B = _as_poly(B, var)
    if A.var != B.var:
        A, B = A._promote(B)
    _check_wrt(A, wrt)
    if A.is_zero and B.is_zero:
        raise DomainError("gcd(0, 0) is undefined")
    if B.is_zero:
        return unit_normal(A)
    if A.is_zero:
        return gcd(B, A)
    ca, pa = content_and_primitive(A)
    cb, pb = content_and_primitive(B)
    g = primitive_part(_subresultant_gcd(pa, pb))
    if isinstance(ca, UniPoly) or isinstance(cb, UniPoly):
        ca = ca if isinstance(ca, UniPoly) else UniPoly(A.inner_var or B.inner_var, [ca])
        cb = cb if isinstance(cb, UniPoly) else UniPoly(ca.var, [cb])
        c = gcd(ca, cb)
        g = g * c
    return unit_normal(g)


def subresultant_resultant(A: UniPoly, B: UniPoly):
    """Resultant with respect to the outer variable via the subresultant PRS.

    Returns a ring element: a Fraction, or a UniPoly in the inner variable.
    """
    if A.is_zero or B.is_zero:
        raise DomainError("resultant with the zero polynomial")
    if A.var != B.var:
        A, B = A._promote(B)
    one = _ring_one(A) if A.inner_var else _ring_one(B)
    s = one
    if A.degree < B.degree:
        A, B = B, A
        if A.degree % 2 == 1 and B.degree % 2 == 1:
            s = -s
    if B.degree == 0:
        return s * B.lc ** A.degree
    g = h = one
    while True:
        delta = A.degree - B.degree
        if A.degree % 2 == 1 and B.degree % 2 == 1:
            s = -s
        R = A.prem(B)
        A, B = B, R
        if B.is_zero:
            return one * 0
        B = B.exquo(g * h ** delta)
        g = A.lc
        if delta == 1:
            h = g
        elif delta > 1:
            h = exquo(g ** delta, h ** (delta - 1))
        if B.degree == 0:
            dA = A.degree
            h = exquo(B.lc ** dA, h ** (dA - 1)) if dA > 1 else B.lc ** dA
            return s * h


# -- square-free machinery ---------------------------------------------------

def square_free_part(A: UniPoly, wrt: str | None = None) -> UniPoly:
    """``A / gcd(A, A')`` in primitive form; same distinct roots as A, all simple."""
    if A.is_zero:
        raise DomainError("square-free part of the zero polynomial")
    wrt = _check_wrt(A, wrt)
    if A.degree <= 0:
        return UniPoly(A.var, [_ring_one(A)])
    pa = primitive_part(A)
    g = gcd(pa, pa.derivative(A.var))
    return unit_normal(pa.exquo(g))


def square_free_decomposition(A: UniPoly, wrt: str | None = None):
    """Yun's algorithm.

    Returns ``(unit, [(f1, m1), (f2, m2), ...])`` with strictly increasing
    multiplicities such that ``A == unit * prod(f**m)`` exactly.  The factors
    are square-free, pairwise coprime and in primitive form; ``unit`` is
    constant in the outer variable (a Fraction, or a UniPoly in the inner
    variable carrying the content).  Factors are grouped by multiplicity, not
    split into irreducibles.
    """
    if A.is_zero:
        raise DomainError("square-free decomposition of the zero polynomial")
    _check_wrt(A, wrt)
    factors = []
    if A.degree > 0:
        _, f = content_and_primitive(A)
        df = f.derivative(f.var)
        a0 = gcd(f, df)
        b = f.exquo(a0)
        c = df.exquo(a0)
        d = c - b.derivative(f.var)
        i = 1
        while b.degree > 0:
            a = gcd(b, d)
            if a.degree > 0:
                factors.append((a, i))
            b = b.exquo(a)
            c = d.exquo(a)
            d = c - b.derivative(f.var)
            i += 1
    prod = UniPoly(A.var, [_ring_one(A)])
    for fac, m in factors:
        prod = prod * fac ** m
    unit = A.exquo(prod)
    if unit.degree > 0:
        raise DomainError("square-free decomposition failed to reconstruct the input")
    return unit.const, factors
