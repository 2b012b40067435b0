"""Facial closure of a plane graph with respect to a deleted vertex set.

Deleting a set X from a plane embedding and, for every x in X, linking the
cyclically consecutive surviving neighbors of x yields a plane graph on V minus X
whose faces remember where the deleted vertices sat.  The constructive
pipelines only need those per-x neighbor cycles as coloring constraints, so
they are first-class outputs here; the embedding of the closure is derived by
local rotation surgery and simply omitted (with a diagnostic) in the rare
configurations where the surgery's dart replacement does not survive the
Euler check.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import NotPlane, XNotSubset
from .graphs import Graph, PlaneEmbedding


@dataclass(frozen=True)
class ClosureResult:
    """Closure graph, per-deleted-vertex constraint cycles, derived embedding.

    ``constraint_sets`` maps every deleted vertex x to the cyclic sequence of
    its surviving neighbors in rotation order; sequences of length 0 or 1 are
    recorded but add no edges.  ``added_edges`` are the closure edges absent
    from the induced subgraph.  ``derived_embedding`` is None when the
    rotation surgery failed validation, in which case ``diagnostic`` says why.
    """

    closure_graph: Graph
    constraint_sets: Mapping[int, tuple[int, ...]]
    added_edges: frozenset[tuple[int, int]]
    derived_embedding: PlaneEmbedding | None
    diagnostic: str | None = None


def facial_closure(embedding: PlaneEmbedding, deleted: Iterable[int]) -> ClosureResult:
    """Delete ``deleted`` and link cyclically consecutive surviving neighbors.

    For each deleted x, its rotation restricted to surviving neighbors gives
    the constraint cycle S(x): three or more survivors get an edge between
    every cyclically consecutive pair, exactly two get that single edge, fewer
    contribute nothing.  The result's graph is the induced subgraph plus those
    edges, deduplicated.

    Raises XNotSubset when ``deleted`` mentions unknown vertices.
    """
    g = embedding.graph
    dropped = frozenset(deleted)
    unknown = dropped - set(g.vertices)
    if unknown:
        raise XNotSubset(f"not vertices of the embedding: {sorted(unknown)}")

    survivors = [v for v in g.vertices if v not in dropped]
    cycles = {
        x: tuple(u for u in embedding.rotation[x] if u not in dropped)
        for x in sorted(dropped)
    }

    base_edges = {e for e in g.edges() if e[0] not in dropped and e[1] not in dropped}
    new_edges: set[tuple[int, int]] = set()
    for cycle in cycles.values():
        r = len(cycle)
        if r == 2:
            a, b = cycle
            new_edges.add((min(a, b), max(a, b)))
        elif r >= 3:
            for i in range(r):
                a, b = cycle[i], cycle[(i + 1) % r]
                new_edges.add((min(a, b), max(a, b)))
    closure_graph = Graph(survivors, sorted(base_edges | new_edges))

    rotation: dict[int, tuple[int, ...]] = {}
    for u in survivors:
        out: list[int] = []
        for w in embedding.rotation[u]:
            if w not in dropped:
                out.append(w)
                continue
            cycle = cycles[w]
            r = len(cycle)
            if r < 2:
                continue
            if r == 2:
                out.append(cycle[0] if cycle[1] == u else cycle[1])
            else:
                i = cycle.index(u)
                out.append(cycle[(i + 1) % r])
                out.append(cycle[(i - 1) % r])
        seen: set[int] = set()
        kept: list[int] = []
        for w in out:
            if w not in seen:
                seen.add(w)
                kept.append(w)
        rotation[u] = tuple(kept)

    try:
        derived = PlaneEmbedding(rotation)
        diagnostic = None
    except NotPlane as e:
        derived = None
        diagnostic = f"rotation surgery failed the Euler check: {e}"

    return ClosureResult(
        closure_graph=closure_graph,
        constraint_sets=MappingProxyType(cycles),
        added_edges=frozenset(new_edges - base_edges),
        derived_embedding=derived,
        diagnostic=diagnostic,
    )
