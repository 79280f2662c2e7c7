"""Built-in test matrices: the alternating-bond hexagon ring and its symmetry operations."""

from __future__ import annotations

from .matrix import ParametricMatrix, build

# 1-based (i, j) -> coefficients in lambda, lowest power first
BENZENE_HUCKEL_ENTRIES = {
    (1, 2): [1],
    (2, 3): [0, 1],
    (3, 4): [1],
    (4, 5): [0, 1],
    (5, 6): [1],
    (1, 6): [0, 1],
}

# c -> [c5, c6, c1, c2, c3, c4] and friends, written as the images of rows:
# U[i][image[i]] = 1 (0-based).
ROTATION_U1 = (4, 5, 0, 1, 2, 3)
REFLECTION_U3 = (1, 0, 5, 4, 3, 2)
REFLECTION_U4 = (5, 4, 3, 2, 1, 0)
REFLECTION_U5 = (3, 2, 1, 0, 5, 4)


def benzene_huckel() -> ParametricMatrix:
    """6x6 ring with couplings alternating between 1 and lambda."""
    return build(6, BENZENE_HUCKEL_ENTRIES)


def ethylene_block() -> ParametricMatrix:
    """The 2x2 block [[0, 1], [1, 0]]."""
    return build(2, {(1, 2): [1]})


BUILTINS = {"benzene-huckel": benzene_huckel}


def permutation_matrix(images) -> list:
    n = len(images)
    return [[1 if images[i] == j else 0 for j in range(n)] for i in range(n)]
