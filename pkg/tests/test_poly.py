import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from paramdisc.errors import DomainError
from paramdisc.poly import (
    ZERO_DEGREE,
    UniPoly,
    bipoly,
    content_and_primitive,
    eval_bipoly_at_lambda,
    gcd,
    square_free_decomposition,
    square_free_part,
    to_rational,
)

x = UniPoly("x", [0, 1])
E = bipoly([[], [1]])
lam = UniPoly("lambda", [0, 1])

# characteristic polynomial of the benzene ring, coefficient by coefficient
P_BENZENE = bipoly([
    [-1, 0, 0, -2, 0, 0, -1],
    [],
    [3, 0, 3, 0, 3],
    [],
    [-3, 0, -3],
    [],
    [1],
])
Q_BENZENE = bipoly([
    [1, 1, 0, 1, 1],   # (l+1)^2 (l^2-l+1)
    [],
    [-2, -1, -2],
    [],
    [1],
])
DEGENERATE_FACTOR = E * E - lam * lam + lam - 1

int_polys = st.lists(st.integers(-5, 5), min_size=1, max_size=7).map(lambda cs: UniPoly("x", cs))
nonzero_polys = int_polys.filter(lambda p: not p.is_zero)


def test_rational_canonical_form():
    q = to_rational("6/-4")
    assert (q.numerator, q.denominator) == (-3, 2)
    assert to_rational("0/5") == Fraction(0, 1)
    assert to_rational(0).denominator == 1
    for bad in ("1/0", "x", "1.5", 1.5, True):
        with pytest.raises(DomainError):
            to_rational(bad)


def test_difference_of_squares():
    assert (x + 1) * (x - 1) == UniPoly("x", [-1, 0, 1])


def test_factored_form_expands_to_char_poly():
    factored = (E + lam + 1) * (E - lam - 1) * DEGENERATE_FACTOR ** 2
    assert factored == P_BENZENE


def test_annihilator_and_zero_degree():
    z = x * 0
    assert z.is_zero
    assert z.degree == ZERO_DEGREE
    assert (P_BENZENE * UniPoly("E")).is_zero
    assert UniPoly("x", [0, 0, 0]).coeffs == ()


def test_variable_mismatch_is_domain_error():
    with pytest.raises(DomainError):
        x + UniPoly("y", [0, 1])
    with pytest.raises(DomainError):
        x * UniPoly("y", [1, 1])
    # a constant in another variable is just a scalar
    assert x + UniPoly("y", [3]) == UniPoly("x", [3, 1])


def test_derivatives():
    dq = Q_BENZENE.derivative("E")
    expected = 4 * E ** 3 - 2 * E * (2 * lam * lam + lam + 2)
    assert dq == expected
    b, c = Fraction(3), Fraction(-7)
    assert (x * x + b * x + c).derivative("x") == 2 * x + b
    assert UniPoly("lambda", [5]).derivative("lambda").is_zero
    assert Q_BENZENE.derivative("lambda") == bipoly([[1, 0, 3, 4], [], [-1, -4]])


def test_eval_bipoly_at_lambda():
    assert eval_bipoly_at_lambda(P_BENZENE, 0) == UniPoly("E", [-1, 0, 3, 0, -3, 0, 1])
    assert eval_bipoly_at_lambda(Q_BENZENE, -1) == UniPoly("E", [0, 0, -3, 0, 1])
    const = bipoly([[2], [], [1]])
    assert eval_bipoly_at_lambda(const, Fraction(7, 3)) == UniPoly("E", [2, 0, 1])


def test_content_and_primitive():
    assert content_and_primitive(2 * x * x + 4) == (2, x * x + 2)
    # sign convention: the content carries the sign, the primitive part is positive-leading
    assert content_and_primitive(-3 * x) == (-3, x)
    assert content_and_primitive(x * x + 2) == (1, x * x + 2)
    assert content_and_primitive(UniPoly("x", ["1/2", "3/4"])) == (Fraction(1, 4), UniPoly("x", [2, 3]))
    c, pp = content_and_primitive(P_BENZENE * (2 * lam + 2))
    assert c == 2 * lam + 2
    assert pp == P_BENZENE
    with pytest.raises(DomainError):
        content_and_primitive(UniPoly("x"))


def test_gcd_examples():
    g = gcd(P_BENZENE, P_BENZENE.derivative("E"), "E")
    assert g == DEGENERATE_FACTOR
    assert gcd(x * x - 1, x - 1) == x - 1
    assert gcd(3 * x * x - 3, UniPoly("x")) == x * x - 1
    with pytest.raises(DomainError):
        gcd(UniPoly("x"), UniPoly("x"))


def test_square_free_part_examples():
    assert square_free_part(P_BENZENE, "E") == Q_BENZENE
    assert square_free_part((x - 1) ** 3) == x - 1
    assert square_free_part(x * x - 1) == x * x - 1
    with pytest.raises(DomainError):
        square_free_part(UniPoly("x"))


def test_square_free_decomposition_examples():
    unit, factors = square_free_decomposition(P_BENZENE, "E")
    assert unit == 1
    assert factors == [((E + lam + 1) * (E - lam - 1), 1), (DEGENERATE_FACTOR, 2)]
    assert square_free_decomposition(x ** 3) == (1, [(x, 3)])
    assert square_free_decomposition(x * x - 1) == (1, [(x * x - 1, 1)])
    unit, factors = square_free_decomposition(-6 * (x - 2) ** 2 * (x + 1) ** 3)
    assert unit == -6 and factors == [(x - 2, 2), (x + 1, 3)]


def test_rendering():
    assert str(UniPoly("x", [Fraction(1, 2), 0, -1])) == "-x^2 + 1/2"
    assert str(UniPoly("x")) == "0"
    assert str(Q_BENZENE) == "E^4 + (-2*lambda^2 - lambda - 2)*E^2 + (lambda^4 + lambda^3 + lambda + 1)"
    assert Q_BENZENE.to_string({"lambda": "l"}).startswith("E^4 + (-2*l^2 - l - 2)*E^2")


def test_immutable_and_hashable():
    with pytest.raises(AttributeError):
        x.var = "y"
    assert hash(UniPoly("x", [2])) == hash(Fraction(2))
    assert len({x + 1, UniPoly("x", [1, 1])}) == 1


@given(nonzero_polys, nonzero_polys)
def test_degree_additivity(a, b):
    assert (a * b).degree == a.degree + b.degree


@given(int_polys, int_polys)
def test_product_rule(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both(a, b):
    g = gcd(a, b)
    assert (a % g).is_zero and (b % g).is_zero


@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_scales_with_common_factor(a, b, c):
    lhs = gcd(a * c, b * c)
    rhs = gcd(c * gcd(a, b), UniPoly("x"))
    assert lhs == rhs


@given(nonzero_polys)
def test_square_free_part_idempotent(a):
    s = square_free_part(a)
    assert square_free_part(s) == s


@given(nonzero_polys)
def test_square_free_decomposition_reconstructs(a):
    unit, factors = square_free_decomposition(a)
    prod = UniPoly("x", [unit])
    for f, m in factors:
        prod = prod * f ** m
        assert gcd(f, f.derivative()).degree == 0
    assert prod == a
    mults = [m for _, m in factors]
    assert mults == sorted(set(mults))


@given(st.lists(st.tuples(st.integers(-50, 50), st.integers(1, 50)), min_size=2, max_size=5))
def test_results_are_in_lowest_terms(pairs):
    p = UniPoly("x", [Fraction(n, d) for n, d in pairs] + [1])
    results = [p * p, p + p, p.derivative(), square_free_part(p), gcd(p, p.derivative())]
    for r in results:
        for c in r.coeffs:
            assert c.denominator > 0
            assert math.gcd(c.numerator, c.denominator) == 1
