"""Poset combinatorics: Möbius function, characteristic and Poincaré
polynomials, Euler characteristic of the complement, and the beta
invariant of a flat.

beta(G) is the number of top-dimensional spheres in the wedge the
singular set of the restricted arrangement is homotopy equivalent to.
It is computed here in closed combinatorial form,

    beta(G) = (-1)^{l(G)} * sum of mu(G, X) over flats X <= G,

which equals (-1)^{l(G)} times the Euler characteristic of the
complement of A∩G inside G (long exact sequence of a pair with
contractible total space, plus additivity of chi for complex algebraic
sets).  The nerve-homology and bounded-chamber computations elsewhere in
the package recompute the same quantity by entirely different routes and
are wired against this one as oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Flat, IntersectionPoset
from .errors import InputError, InternalConsistencyError


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, ascending coefficients, trailing zeros trimmed."""

    coefficients: tuple[int, ...]

    @staticmethod
    def from_coefficients(coeffs: list[int] | tuple[int, ...]) -> IntPolynomial:
        trimmed = list(coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        return IntPolynomial(tuple(trimmed))

    @staticmethod
    def zero() -> IntPolynomial:
        return IntPolynomial(())

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial.from_coefficients(
            [self.coefficient(k) + other.coefficient(k) for k in range(size)]
        )

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coefficients or not other.coefficients:
            return IntPolynomial.zero()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial.from_coefficients(out)

    def __call__(self, x: int | Fraction) -> int | Fraction:
        value: int | Fraction = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coefficient(k)
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            elif k == 1:
                term = "t" if mag == 1 else f"{mag}t"
            else:
                term = f"t^{k}" if mag == 1 else f"{mag}t^{k}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def monomial(k: int, coefficient: int = 1) -> IntPolynomial:
    return IntPolynomial.from_coefficients([0] * k + [coefficient])


def mobius_from_top(p: IntersectionPoset) -> dict[int, int]:
    """mu(top, G) for every flat, keyed by flat index.

    Top-down recursion over the containment order:
    mu(top, top) = 1 and mu(top, G) = -sum of mu(top, X) over X with
    G < X <= top.  Flats are already sorted by descending dimension, so a
    single pass is a valid topological order.
    """
    mu: dict[int, int] = {}
    for f in p.flats:
        if f.index == p.top.index:
            mu[f.index] = 1
        else:
            mu[f.index] = -sum(mu[j] for j in p.strictly_above[f.index])
    return mu


def mobius_interval_from(p: IntersectionPoset, g: Flat) -> dict[int, int]:
    """mu(G, X) for every flat X <= G (including X = G)."""
    lower = sorted(
        set(p.strictly_below[g.index]) | {g.index},
        key=lambda j: -p.flats[j].dim,
    )
    lower_set = set(lower)
    mu: dict[int, int] = {}
    for j in lower:
        if j == g.index:
            mu[j] = 1
        else:
            mu[j] = -sum(mu[k] for k in p.strictly_above[j] if k in lower_set)
    return mu


def characteristic_polynomial(p: IntersectionPoset) -> IntPolynomial:
    """chi(A, t) = sum over flats of mu(top, G) t^{d(G)}."""
    mu = mobius_from_top(p)
    coeffs = [0] * (p.arrangement.ambient_dim + 1)
    for f in p.flats:
        coeffs[f.dim] += mu[f.index]
    return IntPolynomial.from_coefficients(coeffs)


def poincare_polynomial(p: IntersectionPoset) -> IntPolynomial:
    """pi(A, t) = sum over flats of |mu(top, G)| t^{gr(G)}.

    The coefficients are the Betti numbers of the complement, used as an
    independent cross-check layer (constant term always 1).
    """
    mu = mobius_from_top(p)
    coeffs = [0] * (p.arrangement.ambient_dim + 1)
    for f in p.flats:
        coeffs[f.codim] += abs(mu[f.index])
    return IntPolynomial.from_coefficients(coeffs)


def euler_complement(p: IntersectionPoset) -> int:
    """Euler characteristic of the complement: sum of all mu(top, G)."""
    return sum(mobius_from_top(p).values())


@dataclass(frozen=True)
class BetaValue:
    flat: Flat
    degree: int
    value: int


def beta_combinatorial(p: IntersectionPoset, g: Flat) -> BetaValue:
    """beta(A∩G) = (-1)^{l(G)} * sum of mu(G, X) over flats X <= G.

    Always nonnegative; a negative value means the poset is broken.
    For a minimal flat the sum is the single term mu(G, G) = 1 and
    l(G) = 0, giving the convention beta(empty restriction) = 1.
    """
    if g.index >= len(p.flats) or p.flats[g.index] != g:
        raise InputError("flat does not belong to this poset")
    level = p.level(g)
    total = sum(mobius_interval_from(p, g).values())
    value = (-1) ** level * total
    if value < 0:
        raise InternalConsistencyError(
            f"negative beta invariant {value} at flat {g.index}"
        )
    return BetaValue(flat=g, degree=level, value=value)


def beta_all_flats(p: IntersectionPoset) -> list[BetaValue]:
    return [beta_combinatorial(p, f) for f in p.flats]
