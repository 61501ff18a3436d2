"""Monomials as exponent vectors, and the affine semigroups they generate.

A monomial is a tuple of nonnegative integers indexed by simple matchings.
Semigroup algebras are described by finite generator sets; their Krull
dimension is the rank of the generated lattice, and their monomial primes
correspond to faces of the rational cone spanned by the generators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

Monomial = tuple[int, ...]

MAX_MEMBERSHIP_DEGREE = 64


class DegreeCapExceeded(ValueError):
    """Membership was asked for a monomial beyond the exact-search cap."""


def _same_length(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ValueError(f"coordinate length mismatch: {len(a)} != {len(b)}")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    _same_length(a, b)
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """Divisibility in the polynomial ring: a <= b componentwise."""
    _same_length(a, b)
    return all(x <= y for x, y in zip(a, b))


def mono_quotient(b: Monomial, a: Monomial) -> Monomial:
    if not mono_divides(a, b):
        raise ValueError(f"{a} does not divide {b}")
    return tuple(y - x for x, y in zip(a, b))


def mono_pow(a: Monomial, n: int) -> Monomial:
    return tuple(n * x for x in a)


def degree(a: Sequence[int]) -> int:
    return sum(a)


def one(n: int) -> Monomial:
    return (0,) * n


def sigma_power(g: Monomial) -> int | None:
    """n if g is the n-th power of the all-ones monomial, else None."""
    if not g:
        return 0
    first = g[0]
    return first if all(x == first for x in g) else None


def format_monomial(g: Monomial, coords: Sequence[str]) -> str:
    parts = []
    for name, e in zip(coords, g):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# -- lattices --------------------------------------------------------------


def hermite_basis(vectors: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Row Hermite normal form of the integer span of ``vectors``.

    The result is canonical: two vector families span the same lattice iff
    their Hermite bases are equal.
    """
    rows = [list(v) for v in vectors]
    if not rows:
        return ()
    ncols = len(rows[0])
    pivot_row = 0
    for col in range(ncols):
        if pivot_row >= len(rows):
            break
        while True:
            nonzero = [r for r in range(pivot_row, len(rows)) if rows[r][col] != 0]
            if not nonzero:
                break
            best = min(nonzero, key=lambda r: abs(rows[r][col]))
            rows[pivot_row], rows[best] = rows[best], rows[pivot_row]
            done = True
            for r in range(pivot_row + 1, len(rows)):
                if rows[r][col]:
                    f = rows[r][col] // rows[pivot_row][col]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[pivot_row])]
                    if rows[r][col]:
                        done = False
            if done:
                break
        if rows[pivot_row][col] == 0:
            continue
        if rows[pivot_row][col] < 0:
            rows[pivot_row] = [-x for x in rows[pivot_row]]
        p = rows[pivot_row][col]
        for r in range(pivot_row):
            f = rows[r][col] // p
            if f:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
    return tuple(tuple(r) for r in rows[:pivot_row])


def lattice_rank(gens: Iterable[Sequence[int]]) -> int:
    return len(hermite_basis(gens))


def same_lattice(a: Iterable[Sequence[int]], b: Iterable[Sequence[int]]) -> bool:
    return hermite_basis(a) == hermite_basis(b)


def rational_rank(vectors: Sequence[Sequence[int | Fraction]]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    rank = 0
    for col in range(len(rows[0])):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


# -- semigroups ------------------------------------------------------------


def semigroup_member(
    g: Monomial, gens: Iterable[Monomial], max_degree: int = MAX_MEMBERSHIP_DEGREE
) -> bool:
    """Whether g is a nonnegative integer combination of ``gens``.

    Exact: searches the box of vectors componentwise below g.  Zero
    generators are ignored.  Raises :class:`DegreeCapExceeded` past
    ``max_degree`` rather than answering from a truncated search.
    """
    g = tuple(g)
    if degree(g) > max_degree:
        raise DegreeCapExceeded(f"degree {degree(g)} exceeds membership cap {max_degree}")
    useful = sorted({tuple(h) for h in gens if any(h) and mono_divides(tuple(h), g)}, reverse=True)
    return _member(g, tuple(useful))


def _member(g: Monomial, gens: tuple[Monomial, ...]) -> bool:
    @lru_cache(maxsize=None)
    def reach(v: Monomial) -> bool:
        if not any(v):
            return True
        return any(
            mono_divides(h, v) and reach(tuple(x - y for x, y in zip(v, h))) for h in gens
        )

    return reach(g)


def minimal_generators(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Drop zero vectors, duplicates, and generators that the others produce."""
    pool = sorted({tuple(g) for g in gens if any(g)}, key=lambda g: (degree(g), g))
    keep: list[Monomial] = []
    for g in pool:
        # anything producing g has degree < deg g, hence is already in keep
        if not semigroup_member(g, keep, max_degree=max(MAX_MEMBERSHIP_DEGREE, degree(g))):
            keep.append(g)
    return tuple(sorted(keep, key=lambda g: (degree(g), tuple(-x for x in g))))


def semigroup_elements(gens: Iterable[Monomial], deg_bound: int, dim: int | None = None) -> frozenset[Monomial]:
    """All semigroup elements of degree at most ``deg_bound`` (including 1)."""
    gens = [tuple(g) for g in gens if any(g)]
    if dim is None:
        if not gens:
            raise ValueError("dimension unknown for an empty generator set")
        dim = len(gens[0])
    seen = {one(dim)}
    frontier = [one(dim)]
    while frontier:
        nxt = []
        for v in frontier:
            for h in gens:
                w = mono_mul(v, h)
                if degree(w) <= deg_bound and w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


def monomial_sort_key(g: Monomial) -> tuple:
    return (degree(g), tuple(-x for x in g))


# -- cones -----------------------------------------------------------------


def _solve_in_basis(basis: list[list[Fraction]], v: Sequence[int]) -> list[Fraction]:
    """Coordinates of v in terms of linearly independent ``basis`` rows."""
    d = len(basis)
    n = len(v)
    # columns are basis vectors: solve B^T c = v by elimination on [B^T | v]
    m = [[basis[j][i] for j in range(d)] + [Fraction(v[i])] for i in range(n)]
    row = 0
    pivots = []
    for col in range(d):
        piv = next((r for r in range(row, n) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(n):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    for r in range(row, n):
        if m[r][d] != 0:
            raise ValueError("vector outside the span of the basis")
    c = [Fraction(0)] * d
    for r, col in enumerate(pivots):
        c[col] = m[r][d]
    return c


def _nullvector(rows: list[list[Fraction]], d: int) -> list[Fraction]:
    """A nonzero vector orthogonal to ``rows`` (rank d-1 assumed)."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(d):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    free = next(c for c in range(d) if c not in pivots)
    vec = [Fraction(0)] * d
    vec[free] = Fraction(1)
    for r, col in enumerate(pivots):
        vec[col] = -m[r][free]
    return vec


@dataclass(frozen=True)
class ConeFace:
    """A face, recorded as the generators it contains."""

    gens: frozenset[int]
    rank: int


def cone_faces(gens: Sequence[Monomial]) -> tuple[ConeFace, ...]:
    """All faces of the cone spanned by ``gens`` (which must be nonzero and
    nonnegative, so the cone is pointed).

    Facets are found by brute force over (rank-1)-subsets of generators;
    faces are then all intersections of facets, plus the cone itself.
    """
    gens = [tuple(g) for g in gens]
    d = lattice_rank(gens)
    everything = frozenset(range(len(gens)))
    if d == 0:
        return (ConeFace(frozenset(), 0),)
    basis: list[list[Fraction]] = []
    for g in gens:
        trial = basis + [[Fraction(x) for x in g]]
        if rational_rank(trial) > len(basis):
            basis = trial
        if len(basis) == d:
            break
    coords = [_solve_in_basis(basis, g) for g in gens]

    facets: set[frozenset[int]] = set()
    if d == 1:
        facets.add(frozenset())
    else:
        for combo in itertools.combinations(range(len(gens)), d - 1):
            rows = [coords[j] for j in combo]
            if rational_rank(rows) != d - 1:
                continue
            normal = _nullvector(rows, d)
            values = [sum(a * b for a, b in zip(normal, c)) for c in coords]
            if all(v >= 0 for v in values) or all(v <= 0 for v in values):
                facets.add(frozenset(j for j, v in enumerate(values) if v == 0))

    faces = {everything} | facets
    frontier = set(facets)
    while frontier:
        new = set()
        for f in frontier:
            for g in facets:
                h = f & g
                if h not in faces:
                    new.add(h)
        faces |= new
        frontier = new
    out = [ConeFace(f, lattice_rank([gens[j] for j in f])) for f in faces]
    return tuple(sorted(out, key=lambda f: (-f.rank, sorted(f.gens))))


def in_face(g: Monomial, face: ConeFace, gens: Sequence[Monomial]) -> bool:
    """Whether a cone point g lies on ``face``.

    For a point of the cone this is membership in the linear span of the
    face's generators.
    """
    members = [gens[j] for j in face.gens]
    return lattice_rank(members + [g]) == face.rank


# -- algebras and loci -----------------------------------------------------


@dataclass(frozen=True)
class SemigroupAlgebra:
    coords: tuple[str, ...]
    gens: tuple[Monomial, ...]

    @classmethod
    def from_generators(cls, coords: Sequence[str], gens: Iterable[Monomial]) -> "SemigroupAlgebra":
        return cls(tuple(coords), minimal_generators(gens))

    @property
    def dim(self) -> int:
        return len(self.coords)

    @cached_property
    def lattice(self) -> tuple[tuple[int, ...], ...]:
        return hermite_basis(self.gens)

    @cached_property
    def rank(self) -> int:
        return len(self.lattice)

    @cached_property
    def faces(self) -> tuple[ConeFace, ...]:
        return cone_faces(self.gens)

    def contains(self, g: Monomial) -> bool:
        return semigroup_member(tuple(g), self.gens)

    def elements(self, deg_bound: int) -> frozenset[Monomial]:
        return semigroup_elements(self.gens, deg_bound, self.dim)

    def to_dict(self) -> dict:
        return {"coords": list(self.coords), "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_dict(cls, doc: dict) -> "SemigroupAlgebra":
        coords = tuple(doc["coords"])
        gens = tuple(tuple(int(x) for x in g) for g in doc["gens"])
        for g in gens:
            _same_length(g, coords)
        return cls(coords, gens)


@dataclass(frozen=True)
class MonomialIdealLocus:
    """Zero locus of a monomial ideal, as the maximal cone faces avoiding it.

    Each listed face F gives the monomial prime spanned by monomials off F;
    those are the minimal primes over the ideal.
    """

    ideal_gens: tuple[Monomial, ...]
    minimal_faces: tuple[ConeFace, ...]
    heights: tuple[int, ...]
    algebra_rank: int

    @property
    def min_height(self) -> int | None:
        # None: the ideal is the unit ideal and the locus is empty
        return min(self.heights) if self.heights else None

    def face_sets(self, gens: Sequence[Monomial]) -> frozenset[frozenset[Monomial]]:
        """Faces as sets of generator monomials, for comparison across calls."""
        return frozenset(frozenset(gens[j] for j in f.gens) for f in self.minimal_faces)


def locus_of(algebra: SemigroupAlgebra, ideal_gens: Iterable[Monomial]) -> MonomialIdealLocus:
    ideal = tuple(sorted({tuple(g) for g in ideal_gens}))
    for g in ideal:
        if not algebra.contains(g):
            raise ValueError(f"ideal generator {g} is not in the algebra")
    gens = algebra.gens
    avoiding = [
        f for f in algebra.faces if not any(in_face(g, f, gens) for g in ideal)
    ]
    maximal = [f for f in avoiding if not any(f.gens < h.gens for h in avoiding)]
    maximal.sort(key=lambda f: (-f.rank, sorted(f.gens)))
    heights = tuple(algebra.rank - f.rank for f in maximal)
    return MonomialIdealLocus(ideal, tuple(maximal), heights, algebra.rank)


def ght_gdim(algebra: SemigroupAlgebra, m0_gens: Iterable[Monomial], dimR: int) -> tuple[int, int]:
    """Geometric height and dimension of the point cut out by ``m0_gens``,
    measured in the given depiction (an upper bound for the height taken
    over all depictions)."""
    m0 = list(m0_gens)
    if not m0:
        raise ValueError("the maximal ideal needs at least one generator")
    ght = locus_of(algebra, m0).min_height
    if ght is None:
        raise ValueError("the ideal is the whole algebra")
    return ght, dimR - ght
