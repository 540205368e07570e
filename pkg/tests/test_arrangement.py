from __future__ import annotations

from fractions import Fraction

import pytest

from arrcoh.arrangement import (
    Arrangement,
    Flat,
    Hyperplane,
    arrangement_from_coeffs,
    arrangement_stats,
    build_intersection_poset,
    essentialize,
    essentialize_with_chart,
    poset_subspaces_bruteforce,
    restriction_to,
    subarrangement_at,
    validate_arrangement,
)
from arrcoh.errors import InputError, ResourceCapError
from arrcoh.exact_linalg import (
    AffineSubspace,
    RationalMatrix,
    affine_image,
    flat_relation,
    FlatRelation,
    solve_affine,
)

F = Fraction


def subspace(rows, rhs):
    sol = solve_affine(RationalMatrix.from_rows(rows), rhs)
    assert sol is not None
    return sol


class TestValidation:
    def test_boolean_parses(self):
        raw = {
            "dim": 2,
            "hyperplanes": [
                {"normal": ["1", "0"], "offset": "0"},
                {"normal": ["0", "1"], "offset": "0"},
            ],
        }
        a = validate_arrangement(raw)
        assert a.ambient_dim == 2 and len(a) == 2

    def test_canonical_scaling(self):
        a = validate_arrangement(
            {"dim": 1, "hyperplanes": [{"normal": ["2"], "offset": "0"}]}
        )
        assert a.hyperplanes[0] == Hyperplane((F(1),), F(0))

    def test_duplicate_rejected(self):
        raw = {
            "dim": 2,
            "hyperplanes": [
                {"normal": ["1", "0"], "offset": "0"},
                {"normal": ["2", "0"], "offset": "0"},
            ],
        }
        with pytest.raises(InputError, match="same hyperplane"):
            validate_arrangement(raw)

    def test_zero_normal_rejected(self):
        raw = {"dim": 2, "hyperplanes": [{"normal": ["0", "0"], "offset": "1"}]}
        with pytest.raises(InputError, match="normal"):
            validate_arrangement(raw)

    @pytest.mark.parametrize(
        "raw, field",
        [
            ({}, "dim"),
            ({"dim": 2}, "hyperplanes"),
            ({"dim": -1, "hyperplanes": []}, "dim"),
            ({"dim": 2, "hyperplanes": [{"offset": "0"}]}, "normal"),
            ({"dim": 2, "hyperplanes": [{"normal": ["1", "0"]}]}, "offset"),
            ({"dim": 2, "hyperplanes": [{"normal": ["1"], "offset": "0"}]}, "normal"),
        ],
    )
    def test_errors_name_the_field(self, raw, field):
        with pytest.raises(InputError, match=field):
            validate_arrangement(raw)


class TestPosetConstruction:
    def test_generic3_has_seven_flats(self, corpus_posets):
        p = corpus_posets["generic3-c2"]
        assert len(p.flats) == 7
        assert sorted(f.dim for f in p.flats) == [0, 0, 0, 1, 1, 1, 2]

    def test_boolean_has_four_flats(self, corpus_posets):
        p = corpus_posets["boolean-c2"]
        assert len(p.flats) == 4
        assert sorted(f.dim for f in p.flats) == [0, 1, 1, 2]

    def test_empty_arrangement(self, corpus_posets):
        p = corpus_posets["empty-c1"]
        assert len(p.flats) == 1
        assert p.rank_l == 0
        assert p.top.is_top

    def test_matches_bruteforce_oracle(self, corpus, corpus_posets):
        for name, a in corpus.items():
            expected = poset_subspaces_bruteforce(a)
            actual = frozenset(f.subspace for f in corpus_posets[name].flats)
            assert actual == expected, name

    def test_minimal_flats_share_dimension(self, corpus_posets):
        for name, p in corpus_posets.items():
            dims = {p.flats[i].dim for i in p.minimal_flats}
            assert len(dims) == 1, name
            assert dims == {p.n0}, name

    def test_rank_identity_all_flats(self, corpus_posets):
        for name, p in corpus_posets.items():
            for f in p.flats:
                assert p.level(f) + f.codim == p.rank_l, (name, f.index)

    def test_order_agrees_with_flat_relation(self, corpus_posets):
        for name, p in corpus_posets.items():
            for f in p.flats:
                for g in p.flats:
                    if f.index == g.index:
                        continue
                    expected = (
                        flat_relation(f.subspace, g.subspace)
                        == FlatRelation.F1_STRICTLY_CONTAINS_F2
                    )
                    assert (g.index in p.strictly_below[f.index]) == expected, name

    def test_covers_have_no_intermediate(self, corpus_posets):
        for name, p in corpus_posets.items():
            for f in p.flats:
                for j in p.covers[f.index]:
                    assert j in p.strictly_below[f.index]
                    between = [
                        k
                        for k in p.strictly_below[f.index]
                        if j in p.strictly_below[k]
                    ]
                    assert not between, name

    def test_containing_hyperplanes_exact(self, corpus, corpus_posets):
        for name, a in corpus.items():
            p = corpus_posets[name]
            for f in p.flats:
                for i, h in enumerate(a.hyperplanes):
                    expected = h.subspace().contains(f.subspace)
                    assert (i in f.containing_hyperplanes) == expected, name

    def test_cap_enforced(self):
        a = arrangement_from_coeffs(1, [((1,), k) for k in range(5)])
        with pytest.raises(ResourceCapError):
            build_intersection_poset(a, max_hyperplanes=4)


class TestStats:
    def test_two_parallel_lines(self):
        a = arrangement_from_coeffs(2, [((1, 0), 0), ((1, 0), 1)])
        stats = arrangement_stats(build_intersection_poset(a))
        assert stats.rank_l == 1
        assert not stats.is_central
        assert not stats.is_essential

    def test_boolean(self, corpus_posets):
        stats = arrangement_stats(corpus_posets["boolean-c2"])
        assert stats.rank_l == 2 and stats.is_central and stats.is_essential

    def test_empty(self, corpus_posets):
        stats = arrangement_stats(corpus_posets["empty-c1"])
        assert stats.rank_l == 0 and stats.is_central and not stats.is_essential


class TestSubarrangement:
    def test_double_point_of_generic3(self, corpus, corpus_posets):
        a = corpus["generic3-c2"]
        p = corpus_posets["generic3-c2"]
        origin = p.flat_for(subspace([[1, 0], [0, 1]], [0, 0]))
        sub = subarrangement_at(a, origin)
        assert sub.hyperplanes == a.hyperplanes[:2]

    def test_top_gives_empty(self, corpus, corpus_posets):
        a = corpus["generic3-c2"]
        sub = subarrangement_at(a, corpus_posets["generic3-c2"].top)
        assert sub.hyperplanes == ()

    def test_single_hyperplane(self, corpus, corpus_posets):
        a = corpus["generic3-c2"]
        p = corpus_posets["generic3-c2"]
        h1 = p.flat_for(a.hyperplanes[0].subspace())
        assert subarrangement_at(a, h1).hyperplanes == (a.hyperplanes[0],)

    def test_rank_is_codim(self, corpus, corpus_posets):
        for name, a in corpus.items():
            p = corpus_posets[name]
            for f in p.flats:
                sub = subarrangement_at(a, f)
                sp = build_intersection_poset(sub)
                assert sp.rank_l == f.codim, (name, f.index)
                assert len(sp.minimal_flats) == 1  # central
                bottom = sp.flats[next(iter(sp.minimal_flats))]
                assert bottom.subspace == f.subspace, (name, f.index)

    def test_non_flat_rejected(self, corpus):
        a = corpus["generic3-c2"]
        stray = subspace([[1, 0], [0, 1]], [5, 5])
        fake = Flat(0, stray, 0, 2, frozenset())
        with pytest.raises(InputError):
            subarrangement_at(a, fake)


class TestRestriction:
    def test_generic3_on_first_line(self, corpus, corpus_posets):
        p = corpus_posets["generic3-c2"]
        a = corpus["generic3-c2"]
        h1 = p.flat_for(a.hyperplanes[0].subspace())
        r = restriction_to(p, h1)
        # On {x = 0} with chart coordinate y: H2 cuts y = 0, H3 cuts y = 1.
        assert r.arrangement == arrangement_from_coeffs(1, [((1,), 0), ((1,), 1)])
        assert len(r.flat_indices) == 2

    def test_top_restriction_is_the_arrangement(self, corpus, corpus_posets):
        for name in ("generic3-c2", "boolean-c3", "generic4-c2"):
            a = corpus[name]
            r = restriction_to(corpus_posets[name], corpus_posets[name].top)
            assert r.arrangement == a, name

    def test_minimal_restriction_empty(self, corpus_posets):
        p = corpus_posets["generic3-c2"]
        g = p.flats[min(p.minimal_flats, key=lambda i: p.flats[i].index)]
        r = restriction_to(p, g)
        assert r.arrangement.hyperplanes == ()
        assert p.level(g) == 0

    def test_lower_set_isomorphism(self, corpus, corpus_posets):
        """The restriction poset maps onto {X <= G} via the chart."""
        for name, a in corpus.items():
            p = corpus_posets[name]
            for g in p.flats:
                r = restriction_to(p, g)
                rp = build_intersection_poset(r.arrangement)
                pushed = {
                    rf.index: r.chart.push_subspace(rf.subspace) for rf in rp.flats
                }
                lower = {p.flats[j].subspace for j in p.strictly_below[g.index]}
                lower.add(g.subspace)
                assert set(pushed.values()) == lower, (name, g.index)
                assert len(pushed) == len(lower), (name, g.index)
                for rf in rp.flats:
                    for rg in rp.flats:
                        below = rg.index in rp.strictly_below[rf.index]
                        ambient_below = pushed[rf.index].contains(
                            pushed[rg.index]
                        ) and pushed[rf.index] != pushed[rg.index]
                        assert below == ambient_below, (name, g.index)

    def test_restriction_rank_is_level(self, corpus, corpus_posets):
        for name, p in corpus_posets.items():
            for g in p.flats:
                r = restriction_to(p, g)
                rp = build_intersection_poset(r.arrangement)
                assert rp.rank_l == p.level(g), (name, g.index)


class TestEssentialize:
    def test_one_line_in_plane(self):
        a = arrangement_from_coeffs(2, [((1, 0), 0)])
        ess = essentialize(a)
        assert ess == arrangement_from_coeffs(1, [((1,), 0)])

    def test_boolean_unchanged(self, corpus):
        assert essentialize(corpus["boolean-c2"]) == corpus["boolean-c2"]

    def test_one_plane_in_space(self):
        a = arrangement_from_coeffs(3, [((1, 0, 0), 7)])
        ess = essentialize(a)
        assert ess == arrangement_from_coeffs(1, [((1,), 0)])

    def test_poset_isomorphism(self):
        cases = [
            arrangement_from_coeffs(2, [((1, 0), 0)]),
            arrangement_from_coeffs(3, [((1, 0, 0), 7)]),
            arrangement_from_coeffs(3, [((1, 0, 0), 0), ((0, 1, 0), 0), ((1, 1, 0), 0)]),
        ]
        for a in cases:
            ess, m, shift = essentialize_with_chart(a)
            p = build_intersection_poset(a)
            ep = build_intersection_poset(ess)
            image = {f.index: affine_image(f.subspace, m, shift) for f in p.flats}
            assert set(image.values()) == {f.subspace for f in ep.flats}
            assert len(set(image.values())) == len(p.flats)
            for f in p.flats:
                for g in p.flats:
                    below = g.index in p.strictly_below[f.index]
                    mapped_below = image[f.index].contains(image[g.index]) and image[
                        f.index
                    ] != image[g.index]
                    assert below == mapped_below

    def test_rank_preserved_and_essential(self, corpus):
        for name in ("one-point-c1", "boolean-c2", "boolean-c3", "concurrent3-c2"):
            a = corpus[name]
            p = build_intersection_poset(a)
            ess = essentialize(a)
            ep = build_intersection_poset(ess)
            assert ep.rank_l == p.rank_l, name
            assert ep.n0 == 0, name

    def test_non_central_rejected(self, corpus):
        with pytest.raises(InputError):
            essentialize(corpus["two-points-c1"])
