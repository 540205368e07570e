"""Exact rational linear algebra: row reduction, affine solution sets,
and flat intersection.

Everything downstream reduces to questions about linear systems over Q,
and poset correctness is all-or-nothing, so this module is exact by
construction: scalars are `fractions.Fraction` (arbitrary precision,
canonical p/q form), matrices are immutable tuples, and there is no
floating point anywhere.

The canonical form of an affine subspace {x : A x = b} is the reduced
row echelon form of the augmented system [A | b] with zero rows dropped.
Two subspaces are equal iff their canonical forms are bit-equal, which
makes them hashable dict keys and exact poset elements.  A rational
system also cuts out a subspace of C^n, and all incidence questions
(containment, intersection, dimension) for such complex flats are
decided by the same rational eliminations, so nothing here ever needs
complex arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError

Rational = Fraction
Vector = tuple[Fraction, ...]


def as_rational(value: int | str | Fraction) -> Fraction:
    """Coerce an int, 'p/q' string, or Fraction; floats are rejected."""
    if isinstance(value, float):
        raise InputError(f"floating point value not allowed: {value!r}")
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {value!r}") from exc


def rational_str(value: Fraction) -> str:
    """Serialize as 'p/q', or just 'p' when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def vector(values: Iterable[int | str | Fraction]) -> Vector:
    return tuple(as_rational(v) for v in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise InputError(f"dot product length mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def is_zero_vector(u: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in u)


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable matrix over Q, stored as a tuple of row tuples.

    `cols` is explicit so zero-row matrices keep their width.
    """

    entries: tuple[Vector, ...]
    cols: int

    def __post_init__(self) -> None:
        for row in self.entries:
            if len(row) != self.cols:
                raise InputError(
                    f"ragged matrix: row of length {len(row)}, expected {self.cols}"
                )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @staticmethod
    def from_rows(
        rows: Iterable[Iterable[int | str | Fraction]], cols: int | None = None
    ) -> RationalMatrix:
        entries = tuple(vector(r) for r in rows)
        if cols is None:
            if not entries:
                raise InputError("cannot infer column count of an empty matrix")
            cols = len(entries[0])
        return RationalMatrix(entries, cols)

    @staticmethod
    def identity(n: int) -> RationalMatrix:
        rows = tuple(
            tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
        )
        return RationalMatrix(rows, n)

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> RationalMatrix:
        rows = tuple(self.column(j) for j in range(self.cols))
        return RationalMatrix(rows, self.rows)

    def stack(self, other: RationalMatrix) -> RationalMatrix:
        if other.cols != self.cols:
            raise InputError("cannot stack matrices of different widths")
        return RationalMatrix(self.entries + other.entries, self.cols)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        """Matrix-vector product."""
        return tuple(dot(r, v) for r in self.entries)


def _rref(rows: list[list[Fraction]], cols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place Gauss-Jordan elimination; returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rref_rank(m: RationalMatrix) -> tuple[RationalMatrix, int]:
    """Reduced row echelon form and rank.  Idempotent on rref input."""
    rows, pivots = _rref([list(r) for r in m.entries], m.cols)
    reduced = RationalMatrix(tuple(tuple(r) for r in rows), m.cols)
    return reduced, len(pivots)


def rref_pivots(m: RationalMatrix) -> tuple[RationalMatrix, tuple[int, ...]]:
    rows, pivots = _rref([list(r) for r in m.entries], m.cols)
    return RationalMatrix(tuple(tuple(r) for r in rows), m.cols), tuple(pivots)


def inverse(m: RationalMatrix) -> RationalMatrix:
    """Inverse of a square matrix via [M | I] elimination."""
    n = m.rows
    if m.cols != n:
        raise InputError("inverse requires a square matrix")
    aug = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(m.entries)]
    reduced, pivots = _rref(aug, 2 * n)
    if len(pivots) < n or any(p >= n for p in pivots):
        raise InputError("matrix is singular")
    return RationalMatrix(tuple(tuple(r[n:]) for r in reduced), n)


def null_space_basis(m: RationalMatrix) -> tuple[Vector, ...]:
    """Basis of {x : m x = 0}, one vector per free column of the rref."""
    reduced, pivots = rref_pivots(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced.entries[i][f]
        basis.append(tuple(v))
    return tuple(basis)


class FlatRelation(Enum):
    EQUAL = "EQUAL"
    F1_STRICTLY_CONTAINS_F2 = "F1_STRICTLY_CONTAINS_F2"
    F2_STRICTLY_CONTAINS_F1 = "F2_STRICTLY_CONTAINS_F1"
    INCOMPARABLE = "INCOMPARABLE"


@dataclass(frozen=True)
class AffineSubspace:
    """Nonempty affine subspace {x in Q^n : system x = rhs}, canonical.

    Canonical means [system | rhs] is in reduced row echelon form with no
    zero rows, so `system.rows` equals the codimension and equality of
    subspaces is plain dataclass equality.  Construct through
    `solve_affine` or `whole_space`; the raw constructor trusts its input.
    """

    ambient_dim: int
    system: RationalMatrix
    rhs: Vector
    canonical: bool = True

    def __post_init__(self) -> None:
        if self.system.cols != self.ambient_dim:
            raise InputError("system width does not match ambient dimension")
        if len(self.rhs) != self.system.rows:
            raise InputError("rhs length does not match system rows")

    @staticmethod
    def whole_space(n: int) -> AffineSubspace:
        return AffineSubspace(n, RationalMatrix((), n), ())

    @property
    def dim(self) -> int:
        return self.ambient_dim - self.system.rows

    @property
    def codim(self) -> int:
        return self.system.rows

    @property
    def is_whole_space(self) -> bool:
        return self.system.rows == 0

    def augmented_rows(self) -> list[list[Fraction]]:
        return [list(row) + [self.rhs[i]] for i, row in enumerate(self.system.entries)]

    def pivot_columns(self) -> tuple[int, ...]:
        # Canonical rref: the pivot of each row is its first nonzero entry.
        return tuple(
            next(j for j, x in enumerate(row) if x != 0) for row in self.system.entries
        )

    def contains(self, other: AffineSubspace) -> bool:
        """True iff self's equations hold on all of other (self >= other).

        self >= other iff self's augmented rows lie in the row space of
        other's augmented system, i.e. stacking them adds no rank.
        """
        if other.ambient_dim != self.ambient_dim:
            raise InputError("ambient dimension mismatch")
        if self.is_whole_space:
            return True
        stacked = other.augmented_rows() + self.augmented_rows()
        _, pivots = _rref(stacked, self.ambient_dim + 1)
        return len(pivots) == other.system.rows

    def contains_point(self, point: Sequence[Fraction]) -> bool:
        return all(
            dot(row, point) == self.rhs[i] for i, row in enumerate(self.system.entries)
        )

    def parametrize(self) -> tuple[Vector, tuple[Vector, ...]]:
        """A point of the subspace plus a basis of its direction space."""
        pivots = self.pivot_columns()
        pivot_set = set(pivots)
        free = [c for c in range(self.ambient_dim) if c not in pivot_set]
        point = [Fraction(0)] * self.ambient_dim
        for i, p in enumerate(pivots):
            point[p] = self.rhs[i]
        directions = []
        for f in free:
            d = [Fraction(0)] * self.ambient_dim
            d[f] = Fraction(1)
            for i, p in enumerate(pivots):
                d[p] = -self.system.entries[i][f]
            directions.append(tuple(d))
        return tuple(point), tuple(directions)

    def sort_key(self) -> tuple:
        return (self.ambient_dim, self.system.entries, self.rhs)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "ambient_dim": self.ambient_dim,
            "system": [[rational_str(x) for x in row] for row in self.system.entries],
            "rhs": [rational_str(x) for x in self.rhs],
        }


def solve_affine(
    system: RationalMatrix, rhs: Sequence[int | str | Fraction]
) -> AffineSubspace | None:
    """Canonical solution set of `system x = rhs`, or None when empty."""
    b = vector(rhs)
    if len(b) != system.rows:
        raise InputError(
            f"rhs length {len(b)} does not match {system.rows} equations"
        )
    n = system.cols
    aug = [list(row) + [b[i]] for i, row in enumerate(system.entries)]
    reduced, pivots = _rref(aug, n + 1)
    if any(p == n for p in pivots):
        return None  # a pivot in the rhs column: 0 = 1
    kept = [row for row in reduced if any(x != 0 for x in row)]
    sys_rows = tuple(tuple(row[:n]) for row in kept)
    rhs_out = tuple(row[n] for row in kept)
    return AffineSubspace(n, RationalMatrix(sys_rows, n), rhs_out)


def intersect_flats(f1: AffineSubspace, f2: AffineSubspace) -> AffineSubspace | None:
    """Canonical form of f1 ∩ f2; None when disjoint."""
    if f1.ambient_dim != f2.ambient_dim:
        raise InputError("cannot intersect flats of different ambient dimension")
    system = f1.system.stack(f2.system)
    return solve_affine(system, f1.rhs + f2.rhs)


def flat_relation(f1: AffineSubspace, f2: AffineSubspace) -> FlatRelation:
    """Exact containment classification of two nonempty flats."""
    if not isinstance(f1, AffineSubspace) or not isinstance(f2, AffineSubspace):
        raise InputError("flat_relation requires nonempty affine subspaces")
    if f1.ambient_dim != f2.ambient_dim:
        raise InputError("ambient dimension mismatch")
    if f1 == f2:
        return FlatRelation.EQUAL
    if f1.contains(f2):
        return FlatRelation.F1_STRICTLY_CONTAINS_F2
    if f2.contains(f1):
        return FlatRelation.F2_STRICTLY_CONTAINS_F1
    return FlatRelation.INCOMPARABLE


def affine_image(
    s: AffineSubspace, m: RationalMatrix, shift: Sequence[Fraction]
) -> AffineSubspace:
    """Image of a subspace under the affine map x -> m x + shift."""
    if m.cols != s.ambient_dim:
        raise InputError("map width does not match subspace ambient dimension")
    point, directions = s.parametrize()
    image_point = vec_add(m.apply(point), tuple(shift))
    image_dirs = tuple(m.apply(d) for d in directions)
    return from_point_and_directions(m.rows, image_point, image_dirs)


def from_point_and_directions(
    n: int, point: Sequence[Fraction], directions: Sequence[Vector]
) -> AffineSubspace:
    """Smallest affine subspace of Q^n through `point` containing the directions."""
    if directions:
        dir_matrix = RationalMatrix.from_rows(directions, cols=n)
        normals = null_space_basis(dir_matrix)
    else:
        normals = tuple(RationalMatrix.identity(n).entries)
    if not normals:
        return AffineSubspace.whole_space(n)
    system = RationalMatrix.from_rows(normals, cols=n)
    rhs = tuple(dot(a, point) for a in normals)
    result = solve_affine(system, rhs)
    assert result is not None  # consistent by construction
    return result
