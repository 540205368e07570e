"""The nine desk-scale arrangements used by the demos and the test corpus.

Each is small enough for every oracle in the package (brute-force poset,
nerve homology, chamber enumeration) yet together they cover the
interesting axes: empty/nonempty, central/affine, essential or not,
generic/degenerate intersections, and ranks 0 through 3.
"""

from __future__ import annotations

from .arrangement import Arrangement, arrangement_from_coeffs

CORPUS_NAMES = (
    "empty-c1",
    "one-point-c1",
    "two-points-c1",
    "three-points-c1",
    "boolean-c2",
    "boolean-c3",
    "generic3-c2",
    "concurrent3-c2",
    "generic4-c2",
)


def corpus_arrangement(name: str) -> Arrangement:
    if name == "empty-c1":
        return Arrangement(1, ())
    if name == "one-point-c1":
        return arrangement_from_coeffs(1, [((1,), 0)])
    if name == "two-points-c1":
        return arrangement_from_coeffs(1, [((1,), 0), ((1,), 1)])
    if name == "three-points-c1":
        return arrangement_from_coeffs(1, [((1,), 0), ((1,), 1), ((1,), 2)])
    if name == "boolean-c2":
        return arrangement_from_coeffs(2, [((1, 0), 0), ((0, 1), 0)])
    if name == "boolean-c3":
        return arrangement_from_coeffs(
            3, [((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0)]
        )
    if name == "generic3-c2":
        # x = 0, y = 0, x + y = 1: pairwise intersections distinct.
        return arrangement_from_coeffs(2, [((1, 0), 0), ((0, 1), 0), ((1, 1), 1)])
    if name == "concurrent3-c2":
        # Three lines through the origin.
        return arrangement_from_coeffs(2, [((1, 0), 0), ((0, 1), 0), ((1, 1), 0)])
    if name == "generic4-c2":
        # No two parallel, no three concurrent: six double points.
        return arrangement_from_coeffs(
            2, [((1, 0), 0), ((0, 1), 0), ((1, 1), 1), ((1, -1), 2)]
        )
    raise KeyError(f"unknown corpus arrangement {name!r}")


def corpus() -> dict[str, Arrangement]:
    return {name: corpus_arrangement(name) for name in CORPUS_NAMES}
