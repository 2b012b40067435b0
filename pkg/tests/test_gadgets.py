"""Gadget catalog: structure, labels, witnesses, and solver agreement with
the claimed chromatic values."""

from __future__ import annotations

import pytest

from cfum import (
    ColorAssignment,
    VariantSpec,
    check,
    embed_planar,
    exists_coloring,
    gadgets,
    instances,
    is_outerplanar,
)
from cfum.errors import UnknownGadget

V = VariantSpec.from_code

SIZES = {
    "fritsch": (9, 21),
    "G3": (21, 39),
    "G3prime": (36, 69),
    "O_iUMo": (11, 16),
    "H_iUMo": (19, 30),
    "H_pCFo": (23, 60),
    "O_pUMc": (21, 39),
    "H_pUMo": (40, 96),
}

FIXED = sorted(SIZES)


def by_label(spec: gadgets.GadgetSpec) -> dict[str, int]:
    return {lab: v for v, lab in spec.labels.items()}


class TestCatalog:
    def test_names_cover_fixed_gadgets_and_cycles(self):
        names = gadgets.gadget_names()
        assert set(FIXED) <= set(names)
        assert "C_n(n)" in names

    @pytest.mark.parametrize("name", FIXED)
    def test_sizes_and_labels(self, name):
        spec = gadgets.gadget_spec(name)
        assert (spec.graph.n, spec.graph.m) == SIZES[name]
        assert set(spec.labels) == set(spec.graph.vertices)
        assert len(set(spec.labels.values())) == spec.graph.n
        assert spec.source
        assert spec.claimed

    @pytest.mark.parametrize("name", FIXED + ["C_n(6)"])
    def test_planarity(self, name):
        g = gadgets.gadget_spec(name).graph
        assert embed_planar(g).graph == g

    @pytest.mark.parametrize("name", ["O_iUMo", "O_pUMc"])
    def test_o_gadgets_outerplanar(self, name):
        assert is_outerplanar(gadgets.gadget_spec(name).graph)

    def test_generate_and_claimed_values(self):
        assert gadgets.generate("fritsch") == gadgets.gadget_spec("fritsch").graph
        (variant, value), = gadgets.claimed_values("fritsch")
        assert (variant.code, value) == ("pUMo", 6)

    @pytest.mark.parametrize("bad", ["", "frits", "C_2", "C_n(2)", "C_n(x)", "K4"])
    def test_unknown_names_rejected(self, bad):
        with pytest.raises(UnknownGadget):
            gadgets.gadget_spec(bad)


class TestCycleFamily:
    def test_both_spellings_agree(self):
        a = gadgets.gadget_spec("C_n(8)")
        b = gadgets.gadget_spec("C_8")
        assert a.graph == b.graph
        assert a.claimed == b.claimed
        assert a.name == b.name == "C_n(8)"

    def test_graph_is_the_cycle(self):
        assert gadgets.gadget_spec("C_9").graph == instances.cycle(9)

    @pytest.mark.parametrize("n,value", [
        (3, 3), (4, 4), (5, 5), (6, 3), (7, 4), (8, 4), (9, 3),
        (10, 4), (11, 4), (12, 3),
    ])
    def test_claimed_values(self, n, value):
        (variant, claimed), = gadgets.gadget_spec(f"C_{n}").claimed
        assert variant.code == "pCFo"
        assert claimed == value


class TestFritschStructure:
    def test_adjacency_facts(self):
        spec = gadgets.gadget_spec("fritsch")
        at = by_label(spec)
        g = spec.graph
        assert g.has_edge(at["x1"], at["x8"])
        assert g.degree(at["x4"]) == 5
        # diameter 2: every pair is adjacent or shares a neighbor
        for u in g.vertices:
            for v in g.vertices:
                if u >= v or g.has_edge(u, v):
                    continue
                assert set(g.neighbors(u)) & set(g.neighbors(v)), (u, v)

    def test_triangulation(self):
        g = gadgets.gadget_spec("fritsch").graph
        assert g.m == 3 * g.n - 6


class TestWitnesses:
    def test_g3prime_hub_coloring(self):
        spec = gadgets.gadget_spec("G3prime")
        at = by_label(spec)
        sigma = {v: 1 for v in spec.graph.vertices}
        sigma[at["x0"]], sigma[at["y0"]], sigma[at["z0"]] = 2, 3, 4
        assert check(spec.graph, ColorAssignment(sigma, palette_size=4),
                     V("iUMc")) is None

    def test_o_pumc_has_order_three_symmetry(self):
        spec = gadgets.gadget_spec("O_pUMc")
        at = by_label(spec)
        perm = {at["h1"]: at["h2"], at["h2"]: at["h3"], at["h3"]: at["h1"]}
        for s in (1, 2, 3):
            for k in range(1, 7):
                perm[at[f"s{s}x{k}"]] = at[f"s{s % 3 + 1}x{k}"]
        edges = set(spec.graph.edges())
        mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in edges}
        assert mapped == edges

    def test_h_pcfo_merge_labels(self):
        spec = gadgets.gadget_spec("H_pCFo")
        merged = [lab for lab in spec.labels.values() if "=" in lab]
        assert len(merged) == 5
        for tag in "ABCD":
            for i in (1, 2, 3):
                assert any(lab == f"{tag}.y{i}" for lab in spec.labels.values())

    def test_h_pumo_base_vertices(self):
        spec = gadgets.gadget_spec("H_pUMo")
        base = [v for v, lab in spec.labels.items() if lab.startswith("x")]
        assert len(base) == 4
        blocks = {lab.split(".")[0] for lab in spec.labels.values() if "." in lab}
        assert blocks == {f"a{i}" for i in range(1, 7)}


class TestSolverAgreement:
    CHEAP = [
        "fritsch", "G3", "G3prime", "O_iUMo", "H_iUMo", "H_pCFo", "O_pUMc",
        "C_n(5)", "C_n(6)", "C_n(7)",
    ]

    @pytest.mark.parametrize("name", CHEAP)
    def test_claimed_value_is_exact(self, name):
        spec = gadgets.gadget_spec(name)
        for variant, value in spec.claimed:
            assert exists_coloring(spec.graph, variant, value,
                                   time_budget=120) is not None
            if value > 1:
                assert exists_coloring(spec.graph, variant, value - 1,
                                       time_budget=120) is None

    def test_h_pumo_upper_witness(self):
        spec = gadgets.gadget_spec("H_pUMo")
        (variant, value), = spec.claimed
        assert (variant.code, value) == ("pUMc", 6)
        witness = exists_coloring(spec.graph, variant, value, time_budget=120)
        assert witness is not None
        assert check(spec.graph, witness, variant) is None
