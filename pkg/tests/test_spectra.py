import math
import random
from fractions import Fraction

import numpy as np
import pytest

from helpers import random_int_poly, random_symmetric_matrix
from paramdisc.errors import DomainError
from paramdisc.matrix import build, char_poly
from paramdisc.poly import UniPoly, eval_bipoly_at_lambda, square_free_part
from paramdisc.spectra import (
    classify_crossings,
    complex_roots,
    count_real_roots,
    jacobi_eigenvalues,
    sturm_real_roots,
    sweep,
)

x = UniPoly("x", [0, 1])
lam = UniPoly("lambda", [0, 1])
DISC_Q = 1296 * lam ** 4 * (lam + 1) ** 2 * (lam ** 2 - lam + 1)


def test_sturm_on_benzene_discriminant():
    roots = sturm_real_roots(DISC_Q)
    assert [(r.lo, r.hi, r.multiplicity) for r in roots] == [(-1, -1, 2), (0, 0, 4)]
    assert all(r.exact for r in roots)
    assert count_real_roots(DISC_Q) == 2


def test_sturm_irrational_root():
    tol = Fraction(1, 10 ** 12)
    roots = sturm_real_roots(x * x - 2, tol)
    assert len(roots) == 2
    for r, sign in zip(roots, (-1, 1)):
        assert r.width <= tol
        assert r.lo < sign * math.sqrt(2) <= r.hi or r.lo <= sign * math.sqrt(2) < r.hi
        assert abs(r.value - sign * math.sqrt(2)) <= 1e-12


def test_sturm_no_real_roots():
    assert sturm_real_roots(x * x + 1) == []
    with pytest.raises(DomainError):
        sturm_real_roots(UniPoly("x", [3]))


@pytest.mark.parametrize("seed", range(20))
def test_sturm_brackets_have_sign_change(seed):
    f = random_int_poly(random.Random(seed), "x", 5)
    if f.degree < 1:
        return
    for r in sturm_real_roots(f, Fraction(1, 10 ** 9)):
        if r.exact:
            assert f(r.lo) == 0
        else:
            g = square_free_part(f)
            assert g(r.lo) * g(r.hi) <= 0
    expected = sum(1 for z in np.roots([float(c) for c in reversed(f.coeffs)]) if abs(z.imag) < 1e-7)
    distinct = len(sturm_real_roots(f))
    assert distinct <= expected


def test_complex_roots_examples():
    eps = complex_roots(lam ** 2 - lam + 1)
    assert len(eps) == 2
    assert abs(eps[0].value - complex(0.5, -math.sqrt(3) / 2)) < 1e-14
    assert eps[0].value == eps[1].value.conjugate()
    assert all(abs(r.modulus - 1.0) < 1e-14 for r in eps)

    r = complex_roots(x * x - 1)
    assert [z.value for z in r] == [-1, 1] and all(z.is_real for z in r)

    r = complex_roots((x - 2) ** 3)
    assert len(r) == 1 and r[0].multiplicity == 3 and r[0].value == 2


@pytest.mark.parametrize("seed", range(15))
def test_complex_roots_vieta_and_conjugates(seed):
    rng = random.Random(seed)
    f = random_int_poly(rng, "x", rng.randint(2, 6))
    if f.degree < 1:
        return
    roots = complex_roots(f)
    assert sum(r.multiplicity for r in roots) == f.degree
    expanded = [z for r in roots for z in [r.value] * r.multiplicity]
    lc = float(f.lc)
    assert abs(sum(expanded) + float(f.coeffs[-2]) / lc) <= 1e-8 * max(1.0, sum(abs(z) for z in expanded))
    for r in roots:
        if not r.is_real:
            assert any(s.value == r.value.conjugate() for s in roots)
    ref = np.sort_complex(np.roots([float(c) for c in reversed(f.coeffs)]))
    got = np.sort_complex(np.array(expanded))
    # multiple roots are ill-conditioned for companion-matrix solvers, so compare loosely
    assert np.allclose(got, ref, atol=1e-4)


def test_jacobi_spot_values(benzene):
    ev = jacobi_eigenvalues(benzene.eval_at(0))
    assert np.allclose(ev, [-1, -1, -1, 1, 1, 1], atol=1e-10)
    s3 = math.sqrt(3)
    assert np.allclose(jacobi_eigenvalues(benzene.eval_at(-1)), [-s3, -s3, 0, 0, s3, s3], atol=1e-8)
    assert np.allclose(jacobi_eigenvalues(benzene.eval_at(1)), [-2, -1, -1, 1, 1, 2], atol=1e-8)


@pytest.mark.parametrize("seed", range(10))
def test_jacobi_against_reference(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 9))
    A = rng.normal(size=(n, n))
    A = A + A.T
    ev = jacobi_eigenvalues(A)
    assert np.all(np.diff(ev) >= 0)
    assert np.allclose(ev, np.linalg.eigvalsh(A), atol=1e-10)
    assert abs(ev.sum() - np.trace(A)) <= 1e-10 * max(1.0, np.abs(A).sum())
    perm = rng.permutation(n)
    assert np.allclose(jacobi_eigenvalues(A[np.ix_(perm, perm)]), ev, atol=1e-10)


def test_jacobi_rejects_bad_input():
    with pytest.raises(DomainError):
        jacobi_eigenvalues([[0.0, 1.0], [0.0, 0.0]])
    with pytest.raises(DomainError):
        jacobi_eigenvalues([[1.0, 2.0, 3.0]])
    assert jacobi_eigenvalues(np.diag([3.0, -1.0])).tolist() == [-1.0, 3.0]


def test_classify_benzene(benzene):
    rep = classify_crossings(benzene)
    assert rep.identically_zero_before_reduction
    assert rep.discriminant == DISC_Q
    assert [c.lam for c in rep.crossings] == [-1.0, 0.0]
    assert [c.root.multiplicity for c in rep.crossings] == [2, 4]
    assert not rep.unconfirmed
    at_zero = rep.crossings[1]
    assert [len(idx) for idx, _ in at_zero.clusters] == [3, 3]
    eps = sorted((e.value for e in rep.exceptional_points), key=lambda z: z.imag)
    assert len(eps) == 2
    for z, im in zip(eps, (-1, 1)):
        assert abs(z.real - 0.5) <= 1e-10 and abs(z.imag - im * math.sqrt(3) / 2) <= 1e-10
    assert abs(rep.convergence_radius - 1.0) <= 1e-10


def test_classify_constant_matrix():
    rep = classify_crossings(build(2, {(1, 2): [1]}))
    assert not rep.identically_zero_before_reduction
    assert rep.discriminant == 4
    assert rep.crossings == () and rep.exceptional_points == ()
    assert rep.convergence_radius is None


def test_classify_opposite_diagonal():
    rep = classify_crossings(build(2, {(1, 1): [0, 1], (2, 2): [0, -1]}))
    assert rep.discriminant == 4 * lam ** 2
    assert len(rep.crossings) == 1 and rep.crossings[0].lam == 0.0
    assert rep.crossings[0].pairs == ((0, 1),)


def test_classify_reports_unconfirmed_roots():
    # the crossings sit at irrational lambda = +-sqrt(2), so the float
    # eigenvalues there differ by rounding noise that a tiny gap_tol rejects
    H = build(2, {(1, 1): [0, 0, 1], (2, 2): [2]})
    assert [c.lam for c in classify_crossings(H).crossings] == pytest.approx([-math.sqrt(2), math.sqrt(2)])
    rep = classify_crossings(H, gap_tol=1e-300)
    assert rep.crossings == () and len(rep.unconfirmed) == 2


def test_classify_is_deterministic(benzene):
    a = classify_crossings(benzene)
    b = classify_crossings(benzene)
    assert a == b


def test_sweep_grid(benzene):
    table = sweep(benzene, -2, 2, 401)
    assert len(table) == 401 and table.eigenvalues.shape == (401, 6)
    assert table.lambdas[0] == -2 and table.lambdas[-1] == 2 and table.lambdas[200] == 0
    assert np.all(np.diff(table.eigenvalues, axis=1) >= 0)
    two = sweep(benzene, 0, 1, 2)
    assert two.lambdas.tolist() == [0.0, 1.0]
    with pytest.raises(DomainError):
        sweep(benzene, 0, 1, 1)
    with pytest.raises(DomainError):
        sweep(benzene, 1, 1, 10)


def test_sweep_workers_match_sequential(benzene):
    seq = sweep(benzene, -2, 2, 81)
    par = sweep(benzene, -2, 2, 81, workers=4)
    assert np.array_equal(seq.eigenvalues, par.eigenvalues)


@pytest.mark.parametrize("seed", range(6))
def test_exact_roots_match_eigenvalues(seed):
    rng = random.Random(seed)
    H = random_symmetric_matrix(rng, rng.randint(1, 4))
    p = char_poly(H)
    l0 = Fraction(rng.randint(-20, 20), 7)
    specialized = eval_bipoly_at_lambda(p, l0)
    exact = [r.value for r in sturm_real_roots(specialized) for _ in range(r.multiplicity)]
    ev = jacobi_eigenvalues(H.eval_at(l0))
    assert np.allclose(sorted(exact), ev, atol=1e-8)
