"""
Permutation symmetries of a parametric matrix and the finite groups they form.

A (signed) permutation is stored by its row images: the matrix ``U`` has
``U[i][images[i]] = signs[i]`` and zeros elsewhere (0-based indices).  ``U``
is a symmetry of ``H`` when ``U.T @ H(lambda) @ U == H(lambda)`` identically
in lambda, i.e. ``H[k][l] * s_k * s_l == H[images[k]][images[l]]`` for every
pair of indices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .errors import CapabilityError, DomainError
from .matrix import ParametricMatrix, degeneracy_profile
from .poly import UniPoly

DEFAULT_SEARCH_BOUND = 10
DEFAULT_GROUP_BOUND = 10_000


@dataclass(frozen=True, order=True)
class SignedPermutation:
    images: tuple
    signs: tuple = None

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        signs = tuple(1 for _ in images) if self.signs is None else tuple(int(s) for s in self.signs)
        if sorted(images) != list(range(len(images))):
            raise DomainError(f"images {images} are not a permutation of 0..{len(images) - 1}")
        if len(signs) != len(images) or any(s not in (1, -1) for s in signs):
            raise DomainError("signs must be a +-1 sequence matching the images")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "signs", signs)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_matrix(cls, U) -> "SignedPermutation":
        images, signs = [], []
        for i, row in enumerate(U):
            nz = [(j, v) for j, v in enumerate(row) if v != 0]
            if len(nz) != 1 or nz[0][1] not in (1, -1):
                raise DomainError(f"row {i + 1} of U is not a signed unit vector")
            images.append(nz[0][0])
            signs.append(int(nz[0][1]))
        return cls(tuple(images), tuple(signs))

    @property
    def n(self) -> int:
        return len(self.images)

    def matrix(self) -> list:
        n = self.n
        return [[self.signs[i] if self.images[i] == j else 0 for j in range(n)] for i in range(n)]

    def __matmul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Matrix product ``self @ other``."""
        if other.n != self.n:
            raise DomainError("composing permutations of different sizes")
        return SignedPermutation(
            tuple(other.images[self.images[i]] for i in range(self.n)),
            tuple(self.signs[i] * other.signs[self.images[i]] for i in range(self.n)),
        )

    def inverse(self) -> "SignedPermutation":
        images = [0] * self.n
        signs = [1] * self.n
        for i, (j, s) in enumerate(zip(self.images, self.signs)):
            images[j] = i
            signs[j] = s
        return SignedPermutation(tuple(images), tuple(signs))

    def is_identity(self) -> bool:
        return self.images == tuple(range(self.n)) and all(s == 1 for s in self.signs)

    def order(self) -> int:
        k, g = 1, self
        while not g.is_identity():
            g = g @ self
            k += 1
        return k

    def one_based(self) -> list:
        return [i + 1 for i in self.images]


def commutes(H: ParametricMatrix, U: SignedPermutation) -> bool:
    """True iff ``U^T H(lambda) U == H(lambda)`` as a polynomial identity."""
    if U.n != H.n:
        raise DomainError(f"permutation of size {U.n} applied to a {H.n}x{H.n} matrix")
    e = H.entries
    for k in range(H.n):
        for l in range(k, H.n):
            lhs = e[U.images[k]][U.images[l]]
            rhs = e[k][l] if U.signs[k] * U.signs[l] == 1 else -e[k][l]
            if lhs != rhs:
                return False
    return True


def _entry_key(p: UniPoly, signed: bool) -> tuple:
    key = tuple(p.coeffs)
    if signed and p.coeffs and p.lc < 0:
        key = tuple(-c for c in p.coeffs)
    return key


def _search_order(H: ParametricMatrix) -> list:
    """Visit indices so each new one is coupled to an already placed one where possible."""
    order, seen = [], set()
    for start in range(H.n):
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            k = queue.popleft()
            order.append(k)
            for l in range(H.n):
                if l not in seen and not H.entries[k][l].is_zero:
                    seen.add(l)
                    queue.append(l)
    return order


def find_symmetries(H: ParametricMatrix, signed: bool = False,
                    bound: int = DEFAULT_SEARCH_BOUND) -> list:
    """All (signed) permutations commuting with ``H`` for every lambda, sorted canonically.

    The search is exhaustive backtracking with pruning on diagonal entries,
    row signatures and pairwise consistency.  Raises CapabilityError when
    ``H.n`` exceeds ``bound``.
    """
    n = H.n
    if n > bound:
        raise CapabilityError(
            f"exhaustive symmetry search is limited to n <= {bound} (got n = {n}); "
            "verify candidate generators with commutes() instead"
        )
    e = H.entries
    sig = [tuple(sorted(_entry_key(x, signed) for x in row)) for row in e]
    candidates = [[t for t in range(n) if e[t][t] == e[k][k] and sig[t] == sig[k]] for k in range(n)]
    order = _search_order(H)
    images = [None] * n
    signs = [1] * n
    used = [False] * n
    found = []
    sign_choices = (1, -1) if signed else (1,)

    def consistent(k: int) -> bool:
        tk, sk = images[k], signs[k]
        for l in order:
            if images[l] is None:
                continue
            want = e[k][l] if sk * signs[l] == 1 else -e[k][l]
            if e[tk][images[l]] != want:
                return False
        return True

    def place(depth: int):
        if depth == n:
            found.append(SignedPermutation(tuple(images), tuple(signs)))
            return
        k = order[depth]
        for t in candidates[k]:
            if used[t]:
                continue
            used[t] = True
            images[k] = t
            for s in sign_choices:
                signs[k] = s
                if consistent(k):
                    place(depth + 1)
            images[k] = None
            signs[k] = 1
            used[t] = False

    place(0)
    return _identity_first(found, n)


def _identity_first(perms, n: int) -> list:
    ident = SignedPermutation.identity(n)
    rest = sorted(p for p in perms if p != ident)
    return [ident] + rest if ident in perms else rest


@dataclass(frozen=True)
class SymmetryGroup:
    """A finite group of signed permutations; ``elements[0]`` is the identity."""

    elements: tuple
    generators: tuple = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def index(self) -> dict:
        return {g: k for k, g in enumerate(self.elements)}

    @cached_property
    def cayley_table(self) -> tuple:
        """``cayley_table[a][b]`` is the index of ``elements[a] @ elements[b]``."""
        idx = self.index
        return tuple(tuple(idx[a @ b] for b in self.elements) for a in self.elements)

    @cached_property
    def abelian(self) -> bool:
        gens = self.generators or self.elements
        return all(a @ b == b @ a for a in gens for b in gens)

    def element_orders(self) -> list:
        return [g.order() for g in self.elements]


def group_closure(generators, n: int | None = None, bound: int = DEFAULT_GROUP_BOUND) -> SymmetryGroup:
    """Close a set of signed permutations under composition.

    ``n`` is only needed when ``generators`` is empty.
    """
    gens = list(generators)
    if not gens and n is None:
        raise DomainError("group_closure of no generators needs the dimension n")
    n = gens[0].n if gens else n
    if any(g.n != n for g in gens):
        raise DomainError("generators have different sizes")
    ident = SignedPermutation.identity(n)
    elements = [ident]
    seen = {ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = g @ s
            if h not in seen:
                if len(seen) >= bound:
                    raise CapabilityError(f"group closure exceeds {bound} elements")
                seen.add(h)
                elements.append(h)
                queue.append(h)
    return SymmetryGroup(tuple(_identity_first(elements, n)), tuple(gens))


@dataclass(frozen=True)
class SymmetryReport:
    order: int
    abelian: bool
    degeneracy_expected: bool
    degeneracy_observed: bool
    signed: bool
    elements: tuple

    @property
    def consistent(self) -> bool:
        return self.degeneracy_expected == self.degeneracy_observed

    @property
    def note(self) -> str:
        if self.degeneracy_observed and not self.degeneracy_expected:
            return "degeneracy not explained by detected permutation symmetries"
        if self.degeneracy_expected and not self.degeneracy_observed:
            return "nonabelian symmetry group detected but no persistent degeneracy observed"
        if self.degeneracy_observed:
            return "persistent degeneracy explained by a nonabelian symmetry group"
        return "no persistent degeneracy"


def symmetry_report(H: ParametricMatrix, signed: bool = False,
                    bound: int = DEFAULT_SEARCH_BOUND) -> SymmetryReport:
    """Compare the detected symmetry group with the observed degeneracy structure.

    A nonabelian group has an irreducible representation of dimension at
    least two, so it predicts degenerate levels for every lambda.
    """
    elems = find_symmetries(H, signed=signed, bound=bound)
    group = SymmetryGroup(tuple(elems))
    abelian = all(a @ b == b @ a for a in elems for b in elems)
    return SymmetryReport(
        order=group.order,
        abelian=abelian,
        degeneracy_expected=not abelian,
        degeneracy_observed=degeneracy_profile(H).persistent_degeneracy,
        signed=signed,
        elements=tuple(elems),
    )
