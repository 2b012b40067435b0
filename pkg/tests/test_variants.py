"""Checker semantics for the eight neighborhood variants and the facial pair."""

from __future__ import annotations

import itertools
import random

import pytest

from cfum import (
    ALL_NEIGHBORHOOD_VARIANTS,
    ColorAssignment,
    PlaneEmbedding,
    VariantSpec,
    check,
    embed_planar,
    instances,
)
from cfum.errors import IsolatedVertex, MalformedInput, MissingEmbedding
from cfum.variants import CLOSED, OPEN, unique_max
from helpers import named_small_graphs, random_connected_graph

V = VariantSpec.from_code


def colors_of(*values: int) -> ColorAssignment:
    return ColorAssignment({i: c for i, c in enumerate(values, start=1)})


class TestVariantSpec:
    @pytest.mark.parametrize("code", [
        "iCFo", "iCFc", "iUMo", "iUMc", "pCFo", "pCFc", "pUMo", "pUMc",
        "pCFf", "pUMf", "iCFf", "iUMf",
    ])
    def test_code_round_trip(self, code):
        assert V(code).code == code
        assert str(V(code)) == code

    @pytest.mark.parametrize("code", ["", "pCF", "xCFo", "pXYo", "pCFz", "pcfo"])
    def test_bad_codes_rejected(self, code):
        with pytest.raises(MalformedInput):
            V(code)

    def test_all_neighborhood_variants(self):
        assert len(ALL_NEIGHBORHOOD_VARIANTS) == 8
        assert len({v.code for v in ALL_NEIGHBORHOOD_VARIANTS}) == 8
        assert all(v.code[3] in "oc" for v in ALL_NEIGHBORHOOD_VARIANTS)


class TestCheckExamples:
    def test_c4_alternating_pcfo_fails_at_vertex_1(self):
        bad = check(instances.cycle(4), colors_of(1, 2, 1, 2), V("pCFo"))
        assert bad is not None
        assert bad.vertex_or_face == 1
        assert bad.reason == "no-unique-color"

    def test_c4_alternating_pcfc_ok(self):
        assert check(instances.cycle(4), colors_of(1, 2, 1, 2), V("pCFc")) is None

    def test_c5_rainbow_pumo_ok(self):
        assert check(instances.cycle(5), colors_of(1, 2, 3, 4, 5), V("pUMo")) is None

    def test_k2_monochromatic_iumc_fails(self):
        bad = check(instances.complete(2), colors_of(1, 1), V("iUMc"))
        assert bad is not None
        assert bad.vertex_or_face == 1
        assert bad.reason == "max-not-unique"

    def test_k2_monochromatic_icfo_ok(self):
        # each open neighborhood is a single vertex, trivially unique
        assert check(instances.complete(2), colors_of(1, 1), V("iCFo")) is None

    def test_properness_reported_before_rule_violation(self):
        # K2 colored (1,1): pCFo breaks both conditions at vertex 1
        bad = check(instances.complete(2), colors_of(1, 1), V("pCFo"))
        assert bad.reason == "not-proper"
        assert bad.vertex_or_face == 1

    def test_lowest_violating_vertex_wins(self):
        # path 1-2-3-4-5: open CF fails where both neighbors agree
        g = instances.path(5)
        bad = check(g, colors_of(2, 1, 2, 1, 2), V("iCFo"))
        assert bad is not None
        assert bad.vertex_or_face == 2

    def test_uncolored_vertex_rejected(self):
        with pytest.raises(MalformedInput):
            check(instances.cycle(3), {1: 1, 2: 2}, V("iCFc"))

    def test_plain_dict_accepted(self):
        assert check(instances.complete(2), {1: 1, 2: 2}, V("pUMo")) is None


class TestIsolatedAndFacialGuards:
    def test_open_scope_raises_on_isolated_vertex(self):
        from cfum import Graph

        g = instances.cycle(3)
        g2 = Graph([1, 2, 3, 4], [(1, 2), (2, 3), (1, 3)])
        for code in ("iCFo", "pUMo"):
            with pytest.raises(IsolatedVertex):
                check(g2, colors_of(1, 2, 3, 1), V(code))
        assert check(g, colors_of(1, 2, 3), V("pUMo")) is None

    def test_closed_scope_tolerates_isolated_vertex(self):
        from cfum import Graph

        g = Graph([1, 2, 3], [(1, 2)])
        assert check(g, colors_of(1, 2, 1), V("iUMc")) is None
        assert check(g, colors_of(1, 2, 1), V("iCFc")) is None

    def test_facial_needs_embedding(self):
        with pytest.raises(MissingEmbedding):
            check(instances.cycle(3), colors_of(1, 2, 3), V("pCFf"))

    def test_facial_accepts_embedding(self):
        e = embed_planar(instances.cycle(3))
        assert check(e, colors_of(1, 2, 3), V("pCFf")) is None

    def test_neighborhood_scopes_accept_embedding_too(self):
        e = embed_planar(instances.cycle(5))
        assert check(e, colors_of(1, 2, 3, 4, 5), V("pUMo")) is None


class TestFacialChecking:
    def test_alternating_square_fails_both_rules(self):
        e = embed_planar(instances.cycle(4))
        for code in ("pCFf", "pUMf"):
            bad = check(e, colors_of(1, 2, 1, 2), V(code))
            assert bad is not None
            assert isinstance(bad.vertex_or_face, tuple)
            assert set(bad.vertex_or_face) == {1, 2, 3, 4}

    def test_square_with_unique_color_ok(self):
        e = embed_planar(instances.cycle(4))
        assert check(e, colors_of(1, 2, 1, 3), V("pCFf")) is None
        assert check(e, colors_of(1, 2, 1, 3), V("pUMf")) is None

    def test_vertex_properness_reported_before_face_violation(self):
        e = embed_planar(instances.cycle(4))
        bad = check(e, colors_of(1, 1, 2, 2), V("pCFf"))
        assert bad.vertex_or_face == 1
        assert bad.reason == "not-proper"

    def test_edgeless_special_face_is_checked(self):
        e = PlaneEmbedding({1: (), 2: ()})
        assert check(e, colors_of(1, 1), V("pCFf")) is not None
        assert check(e, colors_of(1, 2), V("pCFf")) is None
        assert check(e, colors_of(1, 1), V("pUMf")) is not None
        assert check(e, colors_of(1, 2), V("pUMf")) is None

    def test_isolated_vertex_next_to_edges_unconstrained(self):
        e = PlaneEmbedding({1: (2,), 2: (1,), 3: ()})
        # vertex 3 lies on no traced face, so only the K2 face matters
        assert check(e, colors_of(1, 2, 1), V("pCFf")) is None


class TestCrossVariantImplications:
    def corpus(self):
        rng = random.Random(5)
        graphs = [g for _, g in named_small_graphs()]
        graphs += [random_connected_graph(rng, rng.randint(4, 7)) for _ in range(10)]
        return graphs

    def random_colorings(self, g, rng, k=4, tries=40):
        for _ in range(tries):
            yield ColorAssignment(
                {v: rng.randint(1, k) for v in g.vertices}, palette_size=k
            )

    def test_um_implies_cf_and_open_implies_closed_and_proper_implies_improper(self):
        rng = random.Random(17)
        for g in self.corpus():
            for sigma in self.random_colorings(g, rng):
                verdict = {
                    v.code: check(g, sigma, v) is None
                    for v in ALL_NEIGHBORHOOD_VARIANTS
                }
                for p in "ip":
                    for s in "oc":
                        assert not verdict[f"{p}UM{s}"] or verdict[f"{p}CF{s}"]
                for mid in ("CF", "UM"):
                    assert not verdict[f"p{mid}o"] or verdict[f"p{mid}c"]
                    for s in "oc":
                        assert not verdict[f"p{mid}{s}"] or verdict[f"i{mid}{s}"]

    def test_palette_growth_never_changes_validity(self):
        rng = random.Random(23)
        g = instances.wheel(5)
        for sigma in self.random_colorings(g, rng, k=3):
            widened = ColorAssignment(dict(sigma.items()), palette_size=9)
            for v in ALL_NEIGHBORHOOD_VARIANTS:
                assert (check(g, sigma, v) is None) == (check(g, widened, v) is None)

    def test_monotone_recoloring_preserves_validity(self):
        rng = random.Random(31)
        for g in self.corpus()[:8]:
            for sigma in self.random_colorings(g, rng, k=4, tries=15):
                shift = ColorAssignment({v: c + 3 for v, c in sigma.items()})
                for v in ALL_NEIGHBORHOOD_VARIANTS:
                    assert (check(g, sigma, v) is None) == (
                        check(g, shift, v) is None
                    )

    def test_cf_validity_survives_any_bijection(self):
        rng = random.Random(37)
        g = instances.glued_squares()
        perms = list(itertools.permutations(range(1, 4)))
        for sigma in self.random_colorings(g, rng, k=3, tries=20):
            base = {
                v.code: check(g, sigma, v) is None
                for v in ALL_NEIGHBORHOOD_VARIANTS if "CF" in v.code
            }
            for perm in perms:
                mapped = ColorAssignment({v: perm[c - 1] for v, c in sigma.items()})
                for code, ok in base.items():
                    assert (check(g, mapped, V(code)) is None) == ok

    def test_nonmonotone_swap_breaks_um_on_p3(self):
        # (1,2,1) is pUMc-valid on the path 1-2-3; swapping colors 1 and 2
        # leaves the center with its maximum twice in the closed neighborhood
        g = instances.path(3)
        assert check(g, colors_of(1, 2, 1), V("pUMc")) is None
        bad = check(g, colors_of(2, 1, 2), V("pUMc"))
        assert bad is not None
        assert bad.vertex_or_face == 2
        assert bad.reason == "max-not-unique"


class TestUniqueMax:
    def test_p3_center_examples(self):
        g = instances.path(3)
        assert unique_max(g, colors_of(1, 2, 1), 2, OPEN) is None
        assert unique_max(g, colors_of(1, 2, 3), 2, OPEN) == 3
        assert unique_max(g, colors_of(1, 2, 3), 1, CLOSED) == 2

    def test_string_scopes_accepted(self):
        g = instances.path(3)
        assert unique_max(g, colors_of(1, 2, 3), 2, "open") == 3
        assert unique_max(g, colors_of(1, 2, 3), 1, "closed") == 2

    def test_isolated_open_raises(self):
        from cfum import Graph

        g = Graph([1, 2], [])
        with pytest.raises(IsolatedVertex):
            unique_max(g, colors_of(1, 1), 1, OPEN)

    def test_bad_scope_rejected(self):
        with pytest.raises(MalformedInput):
            unique_max(instances.path(3), colors_of(1, 2, 3), 1, "sideways")
