"""Arrangement data model and the intersection poset.

An arrangement is a finite set of distinct affine hyperplanes
H = {x : a.x = b} in C^n with rational data.  The central object here is
the poset of flats: all nonempty intersections of member hyperplanes,
ordered by inclusion, with the ambient space adjoined as top element.
The poset carries the numerology everything else consumes:

  d(G)   dimension of a flat,
  gr(G)  its codimension n - d(G),
  n0     common dimension of the minimal flats (a parallel family),
  l      the arrangement rank n - n0,
  l(G)   relative level d(G) - n0, so that l(G) + gr(G) = l.

Construction is a breadth-first closure (intersect known flats with each
hyperplane, canonicalize, dedup) rather than all-subsets enumeration;
the 2^|A| subset oracle is retained in `poset_subspaces_bruteforce` for
verification only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InputError, InternalConsistencyError, ResourceCapError
from .exact_linalg import (
    AffineSubspace,
    RationalMatrix,
    Vector,
    as_rational,
    dot,
    intersect_flats,
    rational_str,
    rref_pivots,
    solve_affine,
    vector,
)

DEFAULT_MAX_HYPERPLANES = 20


@dataclass(frozen=True)
class Hyperplane:
    """Affine hyperplane {x : normal.x = offset}, canonically scaled.

    Canonical scaling: the first nonzero entry of `normal` is 1, so two
    hyperplanes are equal iff their fields are equal.
    """

    normal: Vector
    offset: Fraction

    @staticmethod
    def from_coeffs(
        normal: Sequence[int | str | Fraction], offset: int | str | Fraction
    ) -> Hyperplane:
        a = vector(normal)
        b = as_rational(offset)
        lead = next((x for x in a if x != 0), None)
        if lead is None:
            raise InputError("hyperplane normal vector is zero")
        if lead != 1:
            a = tuple(x / lead for x in a)
            b = b / lead
        return Hyperplane(a, b)

    @property
    def ambient_dim(self) -> int:
        return len(self.normal)

    def subspace(self) -> AffineSubspace:
        system = RationalMatrix((self.normal,), len(self.normal))
        sol = solve_affine(system, (self.offset,))
        assert sol is not None  # a single equation is always consistent
        return sol

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        return dot(self.normal, point) - self.offset


@dataclass(frozen=True)
class Arrangement:
    """Finite set of distinct hyperplanes in C^n, in input order."""

    ambient_dim: int
    hyperplanes: tuple[Hyperplane, ...]

    def __post_init__(self) -> None:
        seen = set()
        for h in self.hyperplanes:
            if h.ambient_dim != self.ambient_dim:
                raise InputError(
                    f"hyperplane normal has length {h.ambient_dim}, "
                    f"expected {self.ambient_dim}"
                )
            if h in seen:
                raise InputError(f"duplicate hyperplane {h}")
            seen.add(h)

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def to_json(self) -> dict:
        return {
            "dim": self.ambient_dim,
            "hyperplanes": [
                {
                    "normal": [rational_str(x) for x in h.normal],
                    "offset": rational_str(h.offset),
                }
                for h in self.hyperplanes
            ],
        }


def arrangement_from_coeffs(
    dim: int, rows: Sequence[tuple[Sequence[int | str | Fraction], int | str | Fraction]]
) -> Arrangement:
    """Convenience builder: rows of (normal coefficients, offset)."""
    return Arrangement(dim, tuple(Hyperplane.from_coeffs(a, b) for a, b in rows))


def validate_arrangement(raw: Mapping) -> Arrangement:
    """Parse and validate the arrangement JSON schema.

    Schema: {"dim": n, "hyperplanes": [{"normal": ["1", "0"], "offset": "0"}]}
    with rationals serialized as "p/q" or "p" strings (ints accepted).
    """
    if not isinstance(raw, Mapping):
        raise InputError("arrangement must be a JSON object")
    if "dim" not in raw:
        raise InputError("missing field 'dim'")
    dim = raw["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise InputError(f"field 'dim' must be a nonnegative integer, got {dim!r}")
    if "hyperplanes" not in raw:
        raise InputError("missing field 'hyperplanes'")
    entries = raw["hyperplanes"]
    if not isinstance(entries, Sequence) or isinstance(entries, (str, bytes)):
        raise InputError("field 'hyperplanes' must be a list")
    hyperplanes = []
    for k, item in enumerate(entries):
        if not isinstance(item, Mapping):
            raise InputError(f"hyperplanes[{k}] must be an object")
        if "normal" not in item:
            raise InputError(f"hyperplanes[{k}] missing field 'normal'")
        if "offset" not in item:
            raise InputError(f"hyperplanes[{k}] missing field 'offset'")
        normal = item["normal"]
        if not isinstance(normal, Sequence) or isinstance(normal, (str, bytes)):
            raise InputError(f"hyperplanes[{k}].normal must be a list")
        if len(normal) != dim:
            raise InputError(
                f"hyperplanes[{k}].normal has length {len(normal)}, expected {dim}"
            )
        try:
            h = Hyperplane.from_coeffs(normal, item["offset"])
        except InputError as exc:
            raise InputError(f"hyperplanes[{k}]: {exc}") from exc
        hyperplanes.append(h)
    for i, j in itertools.combinations(range(len(hyperplanes)), 2):
        if hyperplanes[i] == hyperplanes[j]:
            raise InputError(
                f"hyperplanes[{i}] and hyperplanes[{j}] define the same hyperplane"
            )
    return Arrangement(dim, tuple(hyperplanes))


@dataclass(frozen=True)
class Flat:
    """Element of the intersection poset: a flat G with its numerology."""

    index: int
    subspace: AffineSubspace
    dim: int
    codim: int
    containing_hyperplanes: frozenset[int]

    @property
    def is_top(self) -> bool:
        return self.subspace.is_whole_space


@dataclass(frozen=True)
class IntersectionPoset:
    """All flats of an arrangement plus the ambient space as top element.

    Flats are sorted by descending dimension then canonical form, so
    `flats[0]` is always the top.  `strictly_below[i]` / `strictly_above[i]`
    hold the full strict order as index sets; `covers[i]` the flats
    covered by flat i (immediately below it).
    """

    arrangement: Arrangement
    flats: tuple[Flat, ...]
    strictly_below: tuple[frozenset[int], ...]
    strictly_above: tuple[frozenset[int], ...]
    covers: tuple[frozenset[int], ...]
    minimal_flats: frozenset[int]
    n0: int
    rank_l: int

    @property
    def top(self) -> Flat:
        return self.flats[0]

    def level(self, g: Flat) -> int:
        """Relative level l(G) = d(G) - n0."""
        return g.dim - self.n0

    def flat_for(self, subspace: AffineSubspace) -> Flat | None:
        for f in self.flats:
            if f.subspace == subspace:
                return f
        return None


def build_intersection_poset(
    a: Arrangement, max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES
) -> IntersectionPoset:
    """Breadth-first closure of the arrangement under intersection."""
    if len(a) > max_hyperplanes:
        raise ResourceCapError(
            f"{len(a)} hyperplanes exceeds the cap of {max_hyperplanes}"
        )
    n = a.ambient_dim
    top = AffineSubspace.whole_space(n)
    hyper_subspaces = [h.subspace() for h in a.hyperplanes]
    known: set[AffineSubspace] = {top}
    frontier = [top]
    while frontier:
        fresh = []
        for f in frontier:
            for hs in hyper_subspaces:
                cut = intersect_flats(f, hs)
                if cut is not None and cut not in known:
                    known.add(cut)
                    fresh.append(cut)
        frontier = fresh

    ordered = sorted(known, key=lambda s: (-s.dim, s.sort_key()))
    flats = []
    for idx, sub in enumerate(ordered):
        containing = frozenset(
            i for i, hs in enumerate(hyper_subspaces) if hs.contains(sub)
        )
        flats.append(Flat(idx, sub, sub.dim, n - sub.dim, containing))

    count = len(flats)
    below = [set() for _ in range(count)]
    for i in range(count):
        for j in range(count):
            if flats[i].dim > flats[j].dim and flats[i].subspace.contains(
                flats[j].subspace
            ):
                below[i].add(j)
    above = [set() for _ in range(count)]
    for i in range(count):
        for j in below[i]:
            above[j].add(i)
    covers = []
    for i in range(count):
        direct = {
            j
            for j in below[i]
            if not any(j in below[k] for k in below[i] if k != j)
        }
        covers.append(frozenset(direct))

    minimal = frozenset(i for i in range(count) if not below[i])
    min_dims = {flats[i].dim for i in minimal}
    if len(min_dims) != 1:
        raise InternalConsistencyError(
            f"minimal flats have unequal dimensions {sorted(min_dims)}"
        )
    n0 = min_dims.pop()
    return IntersectionPoset(
        arrangement=a,
        flats=tuple(flats),
        strictly_below=tuple(frozenset(s) for s in below),
        strictly_above=tuple(frozenset(s) for s in above),
        covers=tuple(covers),
        minimal_flats=minimal,
        n0=n0,
        rank_l=n - n0,
    )


def poset_subspaces_bruteforce(a: Arrangement) -> frozenset[AffineSubspace]:
    """2^|A| oracle: every nonempty subset intersection, plus the top.

    Exponential; kept for verification only, never used to build posets.
    """
    n = a.ambient_dim
    hyper_subspaces = [h.subspace() for h in a.hyperplanes]
    found = {AffineSubspace.whole_space(n)}
    for r in range(1, len(hyper_subspaces) + 1):
        for subset in itertools.combinations(hyper_subspaces, r):
            current: AffineSubspace | None = subset[0]
            for hs in subset[1:]:
                current = intersect_flats(current, hs)
                if current is None:
                    break
            if current is not None:
                found.add(current)
    return frozenset(found)


@dataclass(frozen=True)
class ArrangementStats:
    rank_l: int
    is_central: bool
    is_essential: bool
    n0: int


def arrangement_stats(p: IntersectionPoset) -> ArrangementStats:
    """Rank, centrality, essentiality.  The empty arrangement is central:
    the top is then the unique element of the poset, hence its minimum."""
    return ArrangementStats(
        rank_l=p.rank_l,
        is_central=len(p.minimal_flats) == 1,
        is_essential=p.n0 == 0,
        n0=p.n0,
    )


def subarrangement_at(a: Arrangement, g: Flat) -> Arrangement:
    """The central sub-arrangement A_G = {H in A : H contains G}."""
    hyper_subspaces = [h.subspace() for h in a.hyperplanes]
    containing = [i for i, hs in enumerate(hyper_subspaces) if hs.contains(g.subspace)]
    common = AffineSubspace.whole_space(a.ambient_dim)
    for i in containing:
        cut = intersect_flats(common, hyper_subspaces[i])
        assert cut is not None  # all contain g's nonempty subspace
        common = cut
    if common != g.subspace:
        raise InputError("subspace is not a flat of this arrangement")
    return Arrangement(a.ambient_dim, tuple(a.hyperplanes[i] for i in containing))


@dataclass(frozen=True)
class FlatChart:
    """Deterministic rational affine chart on a flat G.

    The chart coordinates are G's free variables (non-pivot columns of
    its canonical system), so the chart map and its equation pullback are
    reproducible bit for bit from the canonical form alone.
    """

    subspace: AffineSubspace
    pivots: tuple[int, ...]
    free: tuple[int, ...]

    @staticmethod
    def for_subspace(s: AffineSubspace) -> FlatChart:
        pivots = s.pivot_columns()
        pivot_set = set(pivots)
        free = tuple(c for c in range(s.ambient_dim) if c not in pivot_set)
        return FlatChart(s, pivots, free)

    @property
    def dim(self) -> int:
        return len(self.free)

    def to_ambient(self, y: Sequence[Fraction]) -> Vector:
        """Chart point -> ambient point on G."""
        x = [Fraction(0)] * self.subspace.ambient_dim
        for j, f in enumerate(self.free):
            x[f] = y[j]
        for i, p in enumerate(self.pivots):
            x[p] = self.subspace.rhs[i] - sum(
                (self.subspace.system.entries[i][f] * y[j] for j, f in enumerate(self.free)),
                Fraction(0),
            )
        return tuple(x)

    def pull_equation(
        self, normal: Sequence[Fraction], offset: Fraction
    ) -> tuple[Vector, Fraction]:
        """Restrict an ambient equation normal.x = offset to chart coordinates."""
        rows = self.subspace.system.entries
        coeffs = []
        for j, f in enumerate(self.free):
            c = normal[f] - sum(
                (normal[self.pivots[i]] * rows[i][f] for i in range(len(self.pivots))),
                Fraction(0),
            )
            coeffs.append(c)
        const = offset - sum(
            (normal[self.pivots[i]] * self.subspace.rhs[i] for i in range(len(self.pivots))),
            Fraction(0),
        )
        return tuple(coeffs), const

    def push_subspace(self, s: AffineSubspace) -> AffineSubspace:
        """Image in ambient space of a chart-coordinate subspace.

        A chart equation sum c_j y_j = r means sum c_j x_{free_j} = r on G,
        so the image is cut out by G's system plus the re-embedded rows.
        """
        n = self.subspace.ambient_dim
        rows = list(self.subspace.system.entries)
        rhs = list(self.subspace.rhs)
        for i, row in enumerate(s.system.entries):
            ambient_row = [Fraction(0)] * n
            for j, f in enumerate(self.free):
                ambient_row[f] = row[j]
            rows.append(tuple(ambient_row))
            rhs.append(s.rhs[i])
        result = solve_affine(RationalMatrix(tuple(rows), n), rhs)
        assert result is not None  # the image of a nonempty set is nonempty
        return result


@dataclass(frozen=True)
class RestrictedArrangement:
    """The arrangement A∩G of codimension-one flats inside G, in chart coords.

    `flat_indices[i]` is the poset index of the flat realizing hyperplane i.
    """

    flat: Flat
    arrangement: Arrangement
    flat_indices: tuple[int, ...]
    chart: FlatChart


def restriction_to(p: IntersectionPoset, g: Flat) -> RestrictedArrangement:
    """Flats one dimension below G, packaged as an arrangement inside G."""
    if g.index >= len(p.flats) or p.flats[g.index] != g:
        raise InputError("flat does not belong to this poset")
    chart = FlatChart.for_subspace(g.subspace)
    candidates = [
        j for j in p.strictly_below[g.index] if p.flats[j].dim == g.dim - 1
    ]
    candidates.sort(
        key=lambda j: (
            sorted(p.flats[j].containing_hyperplanes),
            p.flats[j].subspace.sort_key(),
        )
    )
    hyperplanes = []
    for j in candidates:
        sub = p.flats[j].subspace
        pulled = [
            chart.pull_equation(row, sub.rhs[i])
            for i, row in enumerate(sub.system.entries)
        ]
        rows = [list(coeffs) + [const] for coeffs, const in pulled]
        reduced, pivots = rref_pivots(
            RationalMatrix.from_rows(rows, cols=chart.dim + 1)
        )
        if len(pivots) != 1 or pivots[0] == chart.dim:
            raise InternalConsistencyError(
                "codimension-one flat does not restrict to a chart hyperplane"
            )
        row = reduced.entries[0]
        hyperplanes.append(Hyperplane.from_coeffs(row[: chart.dim], row[chart.dim]))
    return RestrictedArrangement(
        flat=g,
        arrangement=Arrangement(chart.dim, tuple(hyperplanes)),
        flat_indices=tuple(candidates),
        chart=chart,
    )


def essentialize_with_chart(
    a: Arrangement,
) -> tuple[Arrangement, RationalMatrix, Vector]:
    """Split off the center of a central arrangement.

    Returns (essential arrangement in C^l, M, s) where the quotient
    coordinates are u = M x + s; each hyperplane a.x = b with a = c M
    becomes {u : c.u = 0}.  The intersection poset maps isomorphically
    under u (flats map to flats through the affine image).
    """
    n = a.ambient_dim
    center: AffineSubspace | None = AffineSubspace.whole_space(n)
    for h in a.hyperplanes:
        center = intersect_flats(center, h.subspace())
        if center is None:
            raise InputError("arrangement is not central")
    k = center.codim
    m = center.system
    shift = tuple(-b for b in center.rhs)
    if k == 0:
        # Already a single flat C^n; only the empty arrangement gets here.
        return Arrangement(0, ()), RationalMatrix((), n), ()
    mt = m.transpose()
    hyperplanes = []
    for h in a.hyperplanes:
        sol = solve_affine(mt, h.normal)
        if sol is None or sol.dim != 0:
            raise InternalConsistencyError(
                "hyperplane normal not uniquely expressed over the center's system"
            )
        c, _ = sol.parametrize()
        if dot(c, center.rhs) != h.offset:
            raise InternalConsistencyError("hyperplane offset inconsistent with center")
        hyperplanes.append(Hyperplane.from_coeffs(c, 0))
    return Arrangement(k, tuple(hyperplanes)), m, shift


def essentialize(a: Arrangement) -> Arrangement:
    """Essential arrangement with isomorphic poset; requires central input."""
    return essentialize_with_chart(a)[0]
