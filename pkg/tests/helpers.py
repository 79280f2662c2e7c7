"""Random-instance generators and independent oracles shared by the tests."""

import random
from fractions import Fraction
from itertools import permutations

from paramdisc import UniPoly, build


def random_symmetric_matrix(rng: random.Random, n: int, max_deg: int = 2, density: float = 0.7):
    entries = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if rng.random() < density:
                deg = rng.randint(0, max_deg)
                entries[(i, j)] = [rng.randint(-3, 3) for _ in range(deg + 1)]
    return build(n, entries)


def random_int_poly(rng: random.Random, var: str, degree: int, lo: int = -9, hi: int = 9):
    coeffs = [rng.randint(lo, hi) for _ in range(degree)]
    lead = 0
    while lead == 0:
        lead = rng.randint(lo, hi)
    return UniPoly(var, coeffs + [lead])


def cofactor_det(M):
    """Laplace expansion along the first row; exponential, for n <= 5 only."""
    n = len(M)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def leibniz_det(M):
    """Sum over permutations; a second independent determinant oracle."""
    n = len(M)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = 1
        for i in range(n):
            term = term * M[i][perm[i]]
        total = total - term if inv % 2 else total + term
    return total
