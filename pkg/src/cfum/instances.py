"""Small named instances used across tests, examples, and the CLI."""

from __future__ import annotations

import networkx as nx

from .errors import MalformedInput
from .graphs import Graph, PlaneEmbedding, embed_planar


def cycle(n: int) -> Graph:
    """Cycle C_n on vertices 1..n."""
    if n < 3:
        raise MalformedInput(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(range(1, n + 1), [(i, i % n + 1) for i in range(1, n + 1)])


def path(n: int) -> Graph:
    """Path P_n on vertices 1..n."""
    if n < 1:
        raise MalformedInput(f"a path needs at least 1 vertex, got {n}")
    return Graph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def complete(n: int) -> Graph:
    """Complete graph K_n on vertices 1..n."""
    if n < 1:
        raise MalformedInput(f"a complete graph needs at least 1 vertex, got {n}")
    return Graph(range(1, n + 1), [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def star(n: int) -> Graph:
    """Star K_{1,n}: center 1 joined to leaves 2..n+1."""
    if n < 1:
        raise MalformedInput(f"a star needs at least 1 leaf, got {n}")
    return Graph(range(1, n + 2), [(1, i) for i in range(2, n + 2)])


def wheel(n: int) -> Graph:
    """Wheel: rim cycle 1..n plus hub n+1 joined to every rim vertex."""
    rim = cycle(n)
    hub = n + 1
    return Graph(range(1, n + 2), rim.edges() + [(i, hub) for i in range(1, n + 1)])


def fan(n: int) -> Graph:
    """Fan: path 1..n plus apex n+1 joined to every path vertex."""
    spine = path(n)
    apex = n + 1
    return Graph(range(1, n + 2), spine.edges() + [(i, apex) for i in range(1, n + 1)])


def glued_squares() -> Graph:
    """Two 4-cycles sharing vertex 1; bipartite, 7 vertices."""
    return Graph(
        range(1, 8),
        [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 6), (6, 7), (7, 1)],
    )


def tetrahedron() -> PlaneEmbedding:
    return embed_planar(complete(4))


def octahedron() -> PlaneEmbedding:
    matching = {(1, 6), (2, 5), (3, 4)}
    edges = [
        (i, j)
        for i in range(1, 7)
        for j in range(i + 1, 7)
        if (i, j) not in matching
    ]
    return embed_planar(Graph(range(1, 7), edges))


def cube() -> PlaneEmbedding:
    edges = [(1, 2), (2, 3), (3, 4), (4, 1), (5, 6), (6, 7), (7, 8), (8, 5),
             (1, 5), (2, 6), (3, 7), (4, 8)]
    return embed_planar(Graph(range(1, 9), edges))


def _shifted(nxg) -> Graph:
    edges = [(u + 1, v + 1) for u, v in nxg.edges()]
    return Graph(range(1, nxg.number_of_nodes() + 1), edges)


def icosahedron() -> PlaneEmbedding:
    return embed_planar(_shifted(nx.icosahedral_graph()))


def dodecahedron() -> PlaneEmbedding:
    return embed_planar(_shifted(nx.dodecahedral_graph()))
