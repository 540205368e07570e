"""Independent oracles shared across test modules.

These deliberately avoid the library's own code paths: the determinant
is cofactor expansion, not elimination, so rank and Smith-normal-form
claims are checked against arithmetic the package never performs.
"""

from __future__ import annotations

import random
from fractions import Fraction


# Minimal 6-vertex triangulation of the projective plane (antipodal
# icosahedron quotient): every edge lies in exactly two of the ten
# triangles, chi = 6 - 15 + 10 = 1.
PROJECTIVE_PLANE_FACES = [
    (0, 1, 2),
    (0, 1, 3),
    (0, 2, 4),
    (0, 3, 5),
    (0, 4, 5),
    (1, 2, 5),
    (1, 3, 4),
    (1, 4, 5),
    (2, 3, 4),
    (2, 3, 5),
]


def det_cofactor(rows: list[list]) -> Fraction:
    """Determinant by cofactor expansion along the first row."""
    n = len(rows)
    assert all(len(r) == n for r in rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * Fraction(rows[0][j]) * det_cofactor(minor)
    return total


def random_fraction_matrix(
    rng: random.Random, rows: int, cols: int, span: int = 4, max_den: int = 3
) -> list[list[Fraction]]:
    return [
        [
            Fraction(rng.randint(-span, span), rng.randint(1, max_den))
            for _ in range(cols)
        ]
        for _ in range(rows)
    ]


def random_int_matrix(
    rng: random.Random, rows: int, cols: int, span: int = 5
) -> list[list[int]]:
    return [[rng.randint(-span, span) for _ in range(cols)] for _ in range(rows)]
