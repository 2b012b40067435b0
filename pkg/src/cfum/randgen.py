"""Seeded random planar and outerplanar instances for property suites.

Both generators are deterministic functions of (n, seed, thin): the planar
one grows a triangulation by repeatedly placing a new vertex inside a
uniformly chosen face, the outerplanar one triangulates a polygon by
recursive random ear cuts.  Thinning removes a random subset of edges while
keeping the graph connected, so downstream open-neighborhood pipelines never
see isolated vertices.
"""

from __future__ import annotations

import random

from .errors import MalformedInput
from .graphs import Graph, PlaneEmbedding


def _check_n(n: int) -> None:
    if n < 3:
        raise MalformedInput(f"need n >= 3, got {n}")


def _connected_after(adj: dict[int, set[int]], u: int, v: int) -> bool:
    """Would the graph stay connected with edge u-v removed?"""
    seen = {u}
    frontier = [u]
    while frontier:
        a = frontier.pop()
        for b in adj[a]:
            if (a, b) in ((u, v), (v, u)):
                continue
            if b not in seen:
                if b == v:
                    return True
                seen.add(b)
                frontier.append(b)
    return False


def _thin_edges(
    adj: dict[int, set[int]], rng: random.Random, thin: float
) -> list[tuple[int, int]]:
    """Edges to delete: each tried in shuffled order, kept out only if the
    graph stays connected."""
    if not 0.0 <= thin < 1.0:
        raise MalformedInput(f"thin must be in [0, 1), got {thin}")
    edges = sorted((u, v) for u in adj for v in adj[u] if u < v)
    rng.shuffle(edges)
    removed = []
    for u, v in edges:
        if rng.random() < thin and _connected_after(adj, u, v):
            adj[u].discard(v)
            adj[v].discard(u)
            removed.append((u, v))
    return removed


def random_planar(n: int, seed: int, thin: float = 0.0) -> PlaneEmbedding:
    """Random plane graph on vertices 1..n, deterministic per seed.

    Built as a triangulation (3n-6 edges) by inserting each new vertex into a
    uniformly chosen face of the embedding so far; with ``thin`` > 0, edges
    are then randomly deleted subject to keeping the graph connected.
    """
    _check_n(n)
    rng = random.Random(seed)
    rot: dict[int, list[int]] = {1: [2, 3], 2: [3, 1], 3: [1, 2]}
    faces: list[tuple[int, int, int]] = [(1, 2, 3), (1, 3, 2)]
    for x in range(4, n + 1):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        rot[b].insert(rot[b].index(a) + 1, x)
        rot[c].insert(rot[c].index(b) + 1, x)
        rot[a].insert(rot[a].index(c) + 1, x)
        rot[x] = [a, c, b]
        faces[i] = (a, b, x)
        faces.append((b, c, x))
        faces.append((c, a, x))
    if thin:
        adj = {v: set(nbrs) for v, nbrs in rot.items()}
        for u, v in _thin_edges(adj, rng, thin):
            rot[u].remove(v)
            rot[v].remove(u)
    return PlaneEmbedding({v: tuple(nbrs) for v, nbrs in rot.items()})


def random_outerplanar(n: int, seed: int, thin: float = 0.0) -> Graph:
    """Random outerplanar graph on vertices 1..n, deterministic per seed.

    A triangulated polygon (2n-3 edges) by recursive random ear cuts, then
    optionally thinned while keeping the graph connected.
    """
    _check_n(n)
    rng = random.Random(seed)
    edges = {(i, i + 1) for i in range(1, n)} | {(1, n)}

    def triangulate(a: int, b: int) -> None:
        if b - a < 2:
            return
        k = rng.randint(a + 1, b - 1)
        if k - a > 1:
            edges.add((a, k))
        if b - k > 1:
            edges.add((k, b))
        triangulate(a, k)
        triangulate(k, b)

    triangulate(1, n)
    adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    if thin:
        _thin_edges(adj, rng, thin)
    return Graph(range(1, n + 1), sorted((u, v) for u in adj for v in adj[u] if u < v))
