"""
paramdisc: exact discriminant analysis of parameter-dependent symmetric matrices.

The typical workflow::

    from paramdisc import benzene_huckel, char_poly, classify_crossings

    H = benzene_huckel()
    char_poly(H)              # exact p(E, lambda)
    rep = classify_crossings(H)
    rep.identically_zero_before_reduction   # True: levels degenerate for all lambda
    [c.lam for c in rep.crossings]          # [-1.0, 0.0]
"""

__version__ = "0.1.0"

from .elimination import determinant_bareiss, discriminant, resultant, sylvester_matrix
from .errors import CapabilityError, DomainError, InternalFault, NumericError, ValidationError
from .fixtures import benzene_huckel, ethylene_block
from .matrix import ParametricMatrix, block_diagonal, build, char_poly, degeneracy_profile, reduced_char_poly
from .poly import (
    Rational,
    UniPoly,
    bipoly,
    content_and_primitive,
    derivative,
    eval_bipoly_at_lambda,
    gcd,
    square_free_decomposition,
    square_free_part,
)
from .spectra import classify_crossings, complex_roots, jacobi_eigenvalues, sturm_real_roots, sweep
from .symmetry import SignedPermutation, commutes, find_symmetries, group_closure, symmetry_report
