"""Topological oracle: nerve of the hyperplane cover of the singular set,
and integer simplicial homology via Smith normal form.

The singular set (union of the hyperplanes) is covered by the
hyperplanes themselves: a finite closed cover by convex sets whose
nonempty intersections are affine subspaces, hence contractible, so the
nerve has the homology of the singular set.  That turns "the singular
set is a wedge of (l-1)-spheres" into a finite check: reduced nerve
homology must be torsion-free and concentrated in degree l-1, and its
rank there is the beta invariant.

A subset of hyperplanes spans a nerve simplex iff its intersection is
nonempty, i.e. iff it is contained in containing_hyperplanes(G) for some
flat G, so the nerve is read straight off the intersection poset.
Simplices above dimension l+1 are dropped: homology in degrees <= l only
needs chains up to dimension l+1, and degrees above l-1 are exactly the
ones being checked for vanishing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .arrangement import IntersectionPoset
from .errors import InputError, ResourceCapError

DEFAULT_NERVE_ORACLE_CAP = 12
NERVE_BUILD_CAP = 20

Simplex = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex, closed under taking faces.

    Simplices are strictly increasing vertex-index tuples.
    """

    vertex_count: int
    simplices: frozenset[Simplex]

    @property
    def max_dim(self) -> int:
        """Dimension of the complex; -1 when empty."""
        if not self.simplices:
            return -1
        return max(len(s) for s in self.simplices) - 1

    @staticmethod
    def from_maximal(vertex_count: int, faces: Sequence[Sequence[int]]) -> SimplicialComplex:
        """Close the given faces under subsets."""
        closed: set[Simplex] = set()
        for face in faces:
            ordered = tuple(sorted(set(face)))
            for r in range(1, len(ordered) + 1):
                closed.update(itertools.combinations(ordered, r))
        return SimplicialComplex(vertex_count, frozenset(closed))

    def simplices_of_dim(self, d: int) -> list[Simplex]:
        return sorted(s for s in self.simplices if len(s) == d + 1)

    def face_closure_holds(self) -> bool:
        for s in self.simplices:
            if len(s) > 1:
                for face in itertools.combinations(s, len(s) - 1):
                    if face not in self.simplices:
                        return False
        return True

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(s) - 1) for s in self.simplices)


def build_singular_nerve(p: IntersectionPoset) -> SimplicialComplex:
    """Nerve of the cover of the singular set by the hyperplanes.

    Vertices are hyperplane indices; a subset spans a simplex iff some
    flat's containing set includes it.  Truncated above dimension
    rank_l + 1 (see module docstring).
    """
    m = len(p.arrangement)
    if m == 0:
        raise InputError("the empty arrangement has an empty singular set, no nerve")
    if m > NERVE_BUILD_CAP:
        raise ResourceCapError(f"{m} hyperplanes exceeds the nerve cap of {NERVE_BUILD_CAP}")
    max_vertices = p.rank_l + 2  # simplices of dimension <= rank_l + 1
    simplices: set[Simplex] = set()
    for f in p.flats:
        members = sorted(f.containing_hyperplanes)
        for r in range(1, min(len(members), max_vertices) + 1):
            simplices.update(itertools.combinations(members, r))
    return SimplicialComplex(m, frozenset(simplices))


def nerve_is_truncated(p: IntersectionPoset) -> bool:
    """True when some flat's containing set exceeds the dimension cap,
    i.e. the built nerve dropped simplices (so its Euler characteristic
    is not that of the full nerve)."""
    cap = p.rank_l + 2
    return any(len(f.containing_hyperplanes) > cap for f in p.flats)


def smith_normal_form(m: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... | dr of an integer matrix.

    Exact integer elimination, pivoting on the minimal absolute value to
    control coefficient growth; the divisibility chain is enforced on the
    resulting diagonal with gcd/lcm exchanges (diag(a, b) is equivalent
    to diag(gcd, lcm) over Z).
    """
    a = [[int(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diagonal: list[int] = []
    k = 0
    while k < min(rows, cols):
        # Find the minimal-absolute-value nonzero entry in the corner block.
        best = None
        for i in range(k, rows):
            for j in range(k, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[k], a[bi] = a[bi], a[k]
        for row in a:
            row[k], row[bj] = row[bj], row[k]
        while True:
            # Clear the pivot column with row operations.
            redo = False
            for i in range(k + 1, rows):
                if a[i][k] != 0:
                    q = a[i][k] // a[k][k]
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[k])]
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]  # strictly smaller remainder
                        redo = True
            if redo:
                continue
            # Clear the pivot row with column operations.
            for j in range(k + 1, cols):
                if a[k][j] != 0:
                    q = a[k][j] // a[k][k]
                    if q:
                        for row in a:
                            row[j] -= q * row[k]
                    if a[k][j] != 0:
                        for row in a:
                            row[k], row[j] = row[j], row[k]
                        redo = True
                        break
            if not redo:
                break
        diagonal.append(abs(a[k][k]))
        k += 1
    # Enforce d1 | d2 | ... | dr.
    changed = True
    while changed:
        changed = False
        for i in range(len(diagonal)):
            for j in range(i + 1, len(diagonal)):
                if diagonal[j] % diagonal[i] != 0:
                    g = _gcd(diagonal[i], diagonal[j])
                    diagonal[i], diagonal[j] = g, diagonal[i] * diagonal[j] // g
                    changed = True
    return tuple(diagonal)


def _gcd(x: int, y: int) -> int:
    while y:
        x, y = y, x % y
    return x


@dataclass(frozen=True)
class HomologyGroup:
    degree: int
    free_rank: int
    torsion: tuple[int, ...]

    def to_json(self) -> dict:
        return {"degree": self.degree, "rank": self.free_rank, "torsion": list(self.torsion)}


@dataclass(frozen=True)
class HomologyResult:
    """Integer homology per degree 0..max_dim (free rank plus torsion)."""

    groups: tuple[HomologyGroup, ...]

    def free_rank(self, k: int) -> int:
        if 0 <= k < len(self.groups):
            return self.groups[k].free_rank
        return 0

    def torsion(self, k: int) -> tuple[int, ...]:
        if 0 <= k < len(self.groups):
            return self.groups[k].torsion
        return ()

    def reduced_rank(self, k: int) -> int:
        rank = self.free_rank(k)
        return rank - 1 if k == 0 else rank


def boundary_matrix(c: SimplicialComplex, k: int) -> list[list[int]]:
    """Matrix of the boundary map C_k -> C_{k-1} in the sorted simplex bases."""
    k_simplices = c.simplices_of_dim(k)
    faces = c.simplices_of_dim(k - 1)
    face_index = {s: i for i, s in enumerate(faces)}
    matrix = [[0] * len(k_simplices) for _ in range(len(faces))]
    for col, simplex in enumerate(k_simplices):
        for drop in range(len(simplex)):
            face = simplex[:drop] + simplex[drop + 1 :]
            matrix[face_index[face]][col] = (-1) ** drop
    return matrix


def simplicial_homology(c: SimplicialComplex) -> HomologyResult:
    """Integer homology via Smith normal forms of the boundary matrices."""
    top = c.max_dim
    if top < 0:
        return HomologyResult(())
    counts = [len(c.simplices_of_dim(k)) for k in range(top + 1)]
    factors: list[tuple[int, ...]] = []
    for k in range(top + 2):
        if 1 <= k <= top and counts[k] > 0 and counts[k - 1] > 0:
            factors.append(smith_normal_form(boundary_matrix(c, k)))
        else:
            factors.append(())
    groups = []
    for k in range(top + 1):
        rank_dk = len(factors[k])
        rank_dk1 = len(factors[k + 1])
        free = counts[k] - rank_dk - rank_dk1
        torsion = tuple(d for d in factors[k + 1] if d > 1)
        groups.append(HomologyGroup(k, free, torsion))
    return HomologyResult(tuple(groups))


@dataclass(frozen=True)
class WedgeCheck:
    """Result of checking the wedge-of-spheres shape of the singular set."""

    beta: int
    is_wedge: bool
    rank_l: int
    homology: HomologyResult


def sigma_wedge_check(
    p: IntersectionPoset, max_hyperplanes: int = DEFAULT_NERVE_ORACLE_CAP
) -> WedgeCheck:
    """Homology-level wedge check for the singular set.

    is_wedge is true iff reduced nerve homology in degrees 0..l is
    torsion-free and vanishes outside degree l-1; beta is the free rank
    in degree l-1 (for l = 1 this is components - 1).  A false result is
    reportable, not an error.
    """
    m = len(p.arrangement)
    if m == 0:
        raise InputError("wedge check needs a nonempty arrangement")
    if m > max_hyperplanes:
        raise ResourceCapError(f"{m} hyperplanes exceeds the oracle cap of {max_hyperplanes}")
    nerve = build_singular_nerve(p)
    hom = simplicial_homology(nerve)
    l = p.rank_l
    is_wedge = True
    for k in range(l + 1):
        if hom.torsion(k):
            is_wedge = False
        if k != l - 1 and hom.reduced_rank(k) != 0:
            is_wedge = False
    beta = hom.reduced_rank(l - 1)
    return WedgeCheck(beta=beta, is_wedge=is_wedge, rank_l=l, homology=hom)
