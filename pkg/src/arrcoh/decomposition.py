"""Symbolic graded decomposition of the group-ring cohomology of the
complement.

For an arrangement of rank l, the cohomology of the complement with
group-ring coefficients lives entirely in degree l, and its associated
graded module splits as a direct sum with one summand per flat G:
beta(A∩G) copies of the module induced up from the subgroup attached to
the central sub-arrangement A_G.  Each induced coefficient module is
itself computed recursively: A_G is essentialized, one hyperplane is
sent to infinity (deconing, which splits off a C^* factor and drops the
degree and the rank by one), and the construction recurses on the
resulting affine arrangement of strictly smaller rank.

The emitted object is symbolic: a tree of module expressions (FREE,
TRIVIAL_Z, TENSOR_TRIVIAL, INDUCED, COPIES, SUM) over the group ring,
graded by the concentration degree.  The summand at G = C^n is the only
free one, of rank beta(A); every other summand carries a TENSOR_TRIVIAL
node (an infinite cyclic factor acting trivially), which is exactly why
it is not free.  No extension data between summands is guessed: this is
the associated graded module, not the ungraded one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .arrangement import (
    Arrangement,
    Hyperplane,
    build_intersection_poset,
    essentialize,
    subarrangement_at,
)
from .errors import InputError, InternalConsistencyError
from .exact_linalg import (
    AffineSubspace,
    RationalMatrix,
    intersect_flats,
    inverse,
)
from .invariants import beta_combinatorial


# --- module expressions -------------------------------------------------


@dataclass(frozen=True)
class Free:
    """Free module of the given rank over the current group ring."""

    rank: int


@dataclass(frozen=True)
class TrivialZ:
    """The integers with trivial group action."""


@dataclass(frozen=True)
class TensorTrivial:
    """inner ⊗ Z, the extra infinite cyclic factor acting trivially on Z."""

    inner: "ModuleExpr"


@dataclass(frozen=True)
class Induced:
    """inner ⊗ over the subgroup attached to `flat`, induced up."""

    flat: AffineSubspace
    inner: "ModuleExpr"


@dataclass(frozen=True)
class Copies:
    """mult copies of inner; flattened into SUM by normalization."""

    mult: int
    inner: "ModuleExpr"


@dataclass(frozen=True)
class Sum:
    parts: tuple["ModuleExpr", ...]


ModuleExpr = Free | TrivialZ | TensorTrivial | Induced | Copies | Sum

ZERO = Free(0)


def module_to_json(m: ModuleExpr) -> dict:
    if isinstance(m, Free):
        return {"kind": "FREE", "rank": m.rank}
    if isinstance(m, TrivialZ):
        return {"kind": "TRIVIAL_Z"}
    if isinstance(m, TensorTrivial):
        return {"kind": "TENSOR_TRIVIAL", "inner": module_to_json(m.inner)}
    if isinstance(m, Induced):
        return {"kind": "INDUCED", "flat": m.flat.to_json(), "inner": module_to_json(m.inner)}
    if isinstance(m, Copies):
        return {"kind": "COPIES", "mult": m.mult, "inner": module_to_json(m.inner)}
    if isinstance(m, Sum):
        return {"kind": "SUM", "parts": [module_to_json(x) for x in m.parts]}
    raise InputError(f"not a module expression: {m!r}")


def _expr_key(m: ModuleExpr) -> tuple[int, str]:
    kind_rank = {Free: 0, TrivialZ: 1, TensorTrivial: 2, Induced: 3, Copies: 4, Sum: 5}
    return (kind_rank[type(m)], json.dumps(module_to_json(m), sort_keys=True))


def _sum_of_normalized(parts: list[ModuleExpr]) -> ModuleExpr:
    """Flatten, drop zeros, merge FREE ranks, sort.  Parts must already be
    in normal form; they are not normalized again."""
    flat_parts: list[ModuleExpr] = []
    for part in parts:
        if isinstance(part, Sum):
            flat_parts.extend(part.parts)
        elif part != ZERO:
            flat_parts.append(part)
    free_rank = sum(p.rank for p in flat_parts if isinstance(p, Free))
    rest = sorted((p for p in flat_parts if not isinstance(p, Free)), key=_expr_key)
    merged: list[ModuleExpr] = ([Free(free_rank)] if free_rank else []) + rest
    if not merged:
        return ZERO
    if len(merged) == 1:
        return merged[0]
    return Sum(tuple(merged))


def normalize_module_expr(m: ModuleExpr) -> ModuleExpr:
    """Canonical form: COPIES flattened into SUM, zero modules and empty
    sums eliminated, nested sums flattened, FREE parts merged, parts in a
    deterministic order.  Idempotent; expressions are compared for
    equality only in this form."""
    if isinstance(m, (Free, TrivialZ)):
        return m
    if isinstance(m, TensorTrivial):
        inner = normalize_module_expr(m.inner)
        return ZERO if inner == ZERO else TensorTrivial(inner)
    if isinstance(m, Induced):
        inner = normalize_module_expr(m.inner)
        return ZERO if inner == ZERO else Induced(m.flat, inner)
    if isinstance(m, Copies):
        if m.mult < 0:
            raise InputError(f"negative multiplicity {m.mult}")
        inner = normalize_module_expr(m.inner)
        if m.mult == 0 or inner == ZERO:
            return ZERO
        if m.mult == 1:
            return inner
        return _sum_of_normalized([inner] * m.mult)
    if isinstance(m, Sum):
        return _sum_of_normalized([normalize_module_expr(p) for p in m.parts])
    raise InputError(f"not a module expression: {m!r}")


def top_level_free_nodes(m: ModuleExpr) -> list[Free]:
    """FREE nodes reachable through SUM/COPIES only.

    These are free direct summands over the ambient group ring; FREE
    nodes below an INDUCED or TENSOR_TRIVIAL boundary refer to smaller
    group rings and do not count.
    """
    if isinstance(m, Free):
        return [m]
    if isinstance(m, Copies):
        return top_level_free_nodes(m.inner)
    if isinstance(m, Sum):
        return [f for part in m.parts for f in top_level_free_nodes(part)]
    return []


def contains_tensor_trivial(m: ModuleExpr) -> bool:
    if isinstance(m, TensorTrivial):
        return True
    if isinstance(m, (Copies, Induced)):
        return contains_tensor_trivial(m.inner)
    if isinstance(m, Sum):
        return any(contains_tensor_trivial(p) for p in m.parts)
    return False


# --- deconing -----------------------------------------------------------


def decone(a: Arrangement, h_infinity: int) -> Arrangement:
    """Associated affine arrangement of a central essential arrangement.

    Coordinates are changed so the chosen hyperplane becomes {x_n = 0};
    the remaining hyperplanes are intersected with the chart {x_n = 1},
    yielding |A| - 1 hyperplanes in C^{n-1} with rank dropped by one.
    """
    if not a.hyperplanes:
        raise InputError("cannot decone an empty arrangement")
    if not 0 <= h_infinity < len(a.hyperplanes):
        raise InputError(f"hyperplane index {h_infinity} out of range")
    n = a.ambient_dim
    center = AffineSubspace.whole_space(n)
    for h in a.hyperplanes:
        cut = intersect_flats(center, h.subspace())
        if cut is None:
            raise InputError("deconing requires a central arrangement")
        center = cut
    if center.dim != 0:
        raise InputError("deconing requires an essential arrangement")
    apex, _ = center.parametrize()

    a_inf = a.hyperplanes[h_infinity].normal
    pivot = next(j for j, x in enumerate(a_inf) if x != 0)
    basis_rows = [
        tuple(Fraction(1 if c == i else 0) for c in range(n))
        for i in range(n)
        if i != pivot
    ]
    basis_rows.append(a_inf)
    t = RationalMatrix(tuple(basis_rows), n)
    t_inv = inverse(t)
    hyperplanes = []
    for i, h in enumerate(a.hyperplanes):
        if i == h_infinity:
            continue
        # In coordinates x' = T (x - apex) the hyperplane is {a'.x' = 0}.
        a_prime = tuple(
            sum((h.normal[r] * t_inv.entries[r][c] for r in range(n)), Fraction(0))
            for c in range(n)
        )
        head, last = a_prime[: n - 1], a_prime[n - 1]
        if all(x == 0 for x in head):
            raise InternalConsistencyError(
                "non-infinity hyperplane became parallel to the chart"
            )
        # Trace on the chart {x'_n = 1}: head.y = -last.
        hyperplanes.append(Hyperplane.from_coeffs(head, -last))
    return Arrangement(n - 1, tuple(hyperplanes))


# --- the graded decomposition -------------------------------------------


@dataclass(frozen=True)
class Summand:
    """One flat's contribution to the concentrated degree."""

    flat_index: int
    subspace: AffineSubspace
    dim: int
    multiplicity: int
    module: ModuleExpr
    covers_all: bool  # A_G is the whole arrangement (subgroup = whole group)
    is_trivial_z: bool  # the summand is isomorphic to Z with trivial action


@dataclass(frozen=True)
class GradedDecomposition:
    arrangement: Arrangement
    concentration_degree: int
    summands: tuple[Summand, ...]
    free_rank: int
    recursion_depth: int

    def module_expression(self) -> ModuleExpr:
        """The whole concentrated degree as one normalized expression."""
        return normalize_module_expr(Sum(tuple(s.module for s in self.summands)))

    def multiplicity_by_flat(self) -> dict[AffineSubspace, int]:
        return {s.subspace: s.multiplicity for s in self.summands}

    def to_json(self) -> dict:
        return {
            "object": "associated graded module of the concentrated degree",
            "degree": self.concentration_degree,
            "free_rank": self.free_rank,
            "l2_note": L2_NOTE,
            "duality_note": DUALITY_NOTE,
            "summands": [
                {
                    "flat": s.subspace.to_json(),
                    "multiplicity": s.multiplicity,
                    "module": module_to_json(s.module),
                    "is_trivial_z": s.is_trivial_z,
                }
                for s in self.summands
            ],
        }


L2_NOTE = (
    "the free summand at G = C^n injects into reduced l2-cohomology of the "
    "complement; all other summands map to 0 there"
)

DUALITY_NOTE = (
    "whenever the complement is aspherical, concentration in one degree plus "
    "torsion-freeness makes its fundamental group a duality group; "
    "asphericity is not decided here"
)

PickInfinity = Callable[[Arrangement], int]


def _pick_lowest(a: Arrangement) -> int:
    return 0


def graded_piece_is_trivial_z(d: GradedDecomposition) -> bool:
    """True iff the concentrated degree is Z with trivial group action."""
    if not d.arrangement.hyperplanes:
        return d.free_rank == 1  # rank 0: the group is trivial, Z[pi] = Z
    return (
        d.free_rank == 0
        and len(d.summands) == 1
        and d.summands[0].multiplicity == 1
        and d.summands[0].is_trivial_z
    )


def decompose_cohomology(
    a: Arrangement,
    *,
    choose_infinity: PickInfinity | None = None,
    max_hyperplanes: int | None = None,
) -> GradedDecomposition:
    """Symbolic graded decomposition of the concentrated cohomology degree.

    One summand per flat with positive beta invariant; the summand at the
    top is FREE(beta(A)), every other is beta copies of an induced
    tensored-trivial module built recursively through deconing.
    Decompositions of sub-arrangements are memoized per call.
    """
    pick = choose_infinity or _pick_lowest
    memo: dict[Arrangement, GradedDecomposition] = {}
    kwargs = {} if max_hyperplanes is None else {"max_hyperplanes": max_hyperplanes}
    return _decompose(a, pick, memo, kwargs)


def _decompose(
    a: Arrangement,
    pick: PickInfinity,
    memo: dict[Arrangement, GradedDecomposition],
    poset_kwargs: dict,
) -> GradedDecomposition:
    cached = memo.get(a)
    if cached is not None:
        return cached
    p = build_intersection_poset(a, **poset_kwargs)
    summands: list[Summand] = []
    free_rank = 0
    depth = 0
    for g in p.flats:
        beta = beta_combinatorial(p, g).value
        if beta == 0:
            continue
        if g.is_top:
            covers_all = not a.hyperplanes
            summands.append(
                Summand(
                    flat_index=g.index,
                    subspace=g.subspace,
                    dim=g.dim,
                    multiplicity=beta,
                    module=Free(beta),
                    covers_all=covers_all,
                    is_trivial_z=covers_all and beta == 1,
                )
            )
            free_rank = beta
            continue
        sub = subarrangement_at(a, g)
        ess = essentialize(sub)
        h_inf = pick(ess)
        deconed = decone(ess, h_inf)
        inner_dec = _decompose(deconed, pick, memo, poset_kwargs)
        depth = max(depth, inner_dec.recursion_depth + 1)
        if deconed.hyperplanes:
            inner = inner_dec.module_expression()
            inner_trivial = graded_piece_is_trivial_z(inner_dec)
        else:
            # Rank-0 base case: FREE(1) over the trivial group is TRIVIAL_Z.
            inner = TrivialZ()
            inner_trivial = True
        covers_all = len(g.containing_hyperplanes) == len(a.hyperplanes)
        module = normalize_module_expr(
            Copies(beta, Induced(g.subspace, TensorTrivial(inner)))
        )
        summands.append(
            Summand(
                flat_index=g.index,
                subspace=g.subspace,
                dim=g.dim,
                multiplicity=beta,
                module=module,
                covers_all=covers_all,
                is_trivial_z=beta == 1 and covers_all and inner_trivial,
            )
        )
    result = GradedDecomposition(
        arrangement=a,
        concentration_degree=p.rank_l,
        summands=tuple(summands),
        free_rank=free_rank,
        recursion_depth=depth,
    )
    memo[a] = result
    return result


def decomposition_signature(
    d: GradedDecomposition,
) -> tuple[int, int, tuple[tuple[tuple, int], ...]]:
    """(degree, free_rank, per-flat multiplicities) for invariance checks."""
    mults = tuple(
        sorted(
            (s.subspace.sort_key(), s.multiplicity) for s in d.summands
        )
    )
    return (d.concentration_degree, d.free_rank, mults)
