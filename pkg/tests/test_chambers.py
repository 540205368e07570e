from __future__ import annotations

import random
from fractions import Fraction

import pytest

from arrcoh.arrangement import arrangement_from_coeffs, arrangement_stats
from arrcoh.chambers import (
    LinearSystem,
    chamber_bounded,
    enumerate_chambers,
    feasible_point,
    fm_feasible,
    satisfies,
)
from arrcoh.errors import InputError, ResourceCapError
from arrcoh.invariants import euler_complement, mobius_from_top, poincare_polynomial

F = Fraction


def system(n, relations):
    return LinearSystem.from_relations(n, relations)


class TestFourierMotzkin:
    def test_open_interval(self):
        assert fm_feasible(system(1, [((1,), 0, ">"), ((1,), 1, "<")]))

    def test_empty_interval(self):
        assert not fm_feasible(system(1, [((1,), 1, ">"), ((1,), 0, "<")]))

    def test_degenerate_strict(self):
        # x > 0 and x < 0 share only the closed point.
        assert not fm_feasible(system(1, [((1,), 0, ">"), ((1,), 0, "<")]))
        assert fm_feasible(system(1, [((1,), 0, ">="), ((1,), 0, "<=")]))

    def test_dimension_zero(self):
        assert fm_feasible(system(0, []))

    def _grid_search(self, s, span=6, steps=25):
        step = F(2 * span, steps - 1)
        values = [F(-span) + step * k for k in range(steps)]
        for x in values:
            for y in values:
                if satisfies(s, (x, y)):
                    return (x, y)
        return None

    def test_agrees_with_grid_oracle(self):
        rng = random.Random(2718)
        for _ in range(40):
            relations = []
            for _ in range(3):
                coeffs = [rng.randint(-3, 3), rng.randint(-3, 3)]
                if all(c == 0 for c in coeffs):
                    coeffs[rng.randrange(2)] = 1
                relations.append((coeffs, rng.randint(-2, 2), rng.choice("<>")))
            s = system(2, relations)
            feasible = fm_feasible(s)
            witness = feasible_point(s)
            grid_hit = self._grid_search(s)
            if grid_hit is not None:
                assert feasible, relations
            if feasible:
                # Exactness certificate: an explicit rational point.
                assert witness is not None and satisfies(s, witness), relations
            else:
                assert witness is None
                assert grid_hit is None, relations

    def test_caps(self):
        with pytest.raises(ResourceCapError):
            fm_feasible(system(7, [((1,) * 7, 0, ">")]))
        relations = [((1, 0), k, ">") for k in range(25)]
        with pytest.raises(ResourceCapError):
            fm_feasible(system(2, relations))


class TestBoundedness:
    def test_triangle_interior(self):
        s = system(2, [((1, 0), 0, ">"), ((0, 1), 0, ">"), ((1, 1), 1, "<")])
        assert chamber_bounded(s)

    def test_half_plane(self):
        assert not chamber_bounded(system(2, [((1, 0), 0, ">")]))

    def test_strip(self):
        # 0 < x < 1 in the plane: the recession cone contains the y-axis.
        s = system(2, [((1, 0), 0, ">"), ((1, 0), 1, "<")])
        assert not chamber_bounded(s)

    def test_infeasible_rejected(self):
        with pytest.raises(InputError):
            chamber_bounded(system(1, [((1,), 0, ">"), ((1,), 0, "<")]))


class TestEnumeration:
    EXPECTED = {
        "empty-c1": (1, 0),
        "one-point-c1": (2, 0),
        "two-points-c1": (3, 1),
        "three-points-c1": (4, 2),
        "boolean-c2": (4, 0),
        "boolean-c3": (8, 0),
        "generic3-c2": (7, 1),
        "concurrent3-c2": (6, 0),
        "generic4-c2": (11, 3),
    }

    def test_counts(self, corpus):
        for name, (total, bounded) in self.EXPECTED.items():
            report = enumerate_chambers(corpus[name])
            assert (report.total, report.bounded) == (total, bounded), name

    def test_sign_vectors_well_formed(self, corpus):
        report = enumerate_chambers(corpus["two-points-c1"])
        assert sorted(c.signs for c in report.chambers) == ["++", "+-", "--"]
        segment = next(c for c in report.chambers if c.signs == "+-")
        assert segment.bounded  # between the two points

    def test_total_is_poincare_at_one(self, corpus, corpus_posets):
        # Chamber-count identity over the reals.
        for name, a in corpus.items():
            report = enumerate_chambers(a)
            assert report.total == poincare_polynomial(corpus_posets[name])(1), name

    def test_bounded_is_abs_euler_when_essential(self, corpus, corpus_posets):
        for name, a in corpus.items():
            p = corpus_posets[name]
            if arrangement_stats(p).is_essential:
                report = enumerate_chambers(a)
                assert report.bounded == abs(euler_complement(p)), name
                assert report.bounded == abs(sum(mobius_from_top(p).values())), name

    def test_central_essential_has_no_bounded_chambers(self, corpus, corpus_posets):
        for name, a in corpus.items():
            stats = arrangement_stats(corpus_posets[name])
            if stats.is_central and stats.is_essential and a.hyperplanes:
                assert enumerate_chambers(a).bounded == 0, name

    def test_cap(self):
        a = arrangement_from_coeffs(1, [((1,), k) for k in range(13)])
        with pytest.raises(ResourceCapError):
            enumerate_chambers(a)
