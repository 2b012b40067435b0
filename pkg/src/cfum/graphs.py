"""Graphs, plane embeddings, faces, and the text formats shared by the tools.

Vertices are positive integers, 1-based in files.  Graphs are simple and
undirected.  A plane embedding is a rotation system: the clockwise cyclic
order of neighbors around every vertex.  Faces are orbits of darts under the
usual successor rule and are validated against Euler's relation component by
component.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

import networkx as nx

from .errors import (
    InconsistentRotation,
    MalformedInput,
    NotPlane,
    SelfLoop,
    SizeLimit,
    XNotSubset,
)


class Graph:
    """A finite simple undirected graph.

    Parameters
    ----------
    vertices : iterable of int
        Positive vertex identifiers, not necessarily contiguous.
    edges : iterable of pairs
        Unordered pairs of distinct known vertices; duplicates collapse.
    """

    __slots__ = ("_adj", "_m")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            if not isinstance(v, int) or v < 1:
                raise MalformedInput(f"vertex ids must be positive integers, got {v!r}")
            if v in adj:
                raise MalformedInput(f"duplicate vertex {v}")
            adj[v] = set()
        for e in edges:
            u, v = e
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise MalformedInput(f"edge {u}-{v} mentions an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: tuple(sorted(adj[v])) for v in sorted(adj)}
        self._m = sum(len(nbrs) for nbrs in self._adj.values()) // 2

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self._adj)

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in sorted order."""
        return [(u, v) for u in self._adj for v in self._adj[u] if u < v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class ColorAssignment:
    """A total coloring: vertex -> color with every color in 1..palette_size."""

    __slots__ = ("_colors", "palette_size")

    def __init__(self, colors: Mapping[int, int], palette_size: int | None = None):
        colors = dict(colors)
        if palette_size is None:
            palette_size = max(colors.values(), default=1)
        if palette_size < 1:
            raise MalformedInput(f"palette size must be positive, got {palette_size}")
        for v, c in colors.items():
            if not isinstance(c, int) or not 1 <= c <= palette_size:
                raise MalformedInput(f"color {c!r} at vertex {v} outside 1..{palette_size}")
        self._colors = colors
        self.palette_size = palette_size

    @property
    def colors(self) -> Mapping[int, int]:
        return MappingProxyType(self._colors)

    def __getitem__(self, v: int) -> int:
        return self._colors[v]

    def get(self, v: int, default=None):
        return self._colors.get(v, default)

    def __contains__(self, v: int) -> bool:
        return v in self._colors

    def __len__(self) -> int:
        return len(self._colors)

    def __iter__(self):
        return iter(self._colors)

    def items(self):
        return self._colors.items()

    def used_colors(self) -> set[int]:
        return set(self._colors.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, ColorAssignment):
            return self._colors == other._colors
        return NotImplemented

    def __repr__(self) -> str:
        return f"ColorAssignment({self._colors!r}, palette_size={self.palette_size})"


@dataclass(frozen=True)
class Face:
    """One face of a plane embedding.

    ``walk`` lists the tail vertex of every boundary dart in traversal order;
    ``boundary`` is the set of distinct vertices on the walk.  The single face
    of an embedding without edges has an empty walk and every vertex on its
    boundary.
    """

    walk: tuple[int, ...]
    boundary: frozenset[int]

    def __len__(self) -> int:
        return len(self.walk)


def _canonical_walk(walk: tuple[int, ...]) -> tuple[int, ...]:
    start = min(range(len(walk)), key=lambda i: walk[i:] + walk[:i])
    return walk[start:] + walk[:start]


def _trace_orbits(rot: Mapping[int, tuple[int, ...]]) -> list[tuple[int, ...]]:
    pos = {v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in rot.items()}
    seen: set[tuple[int, int]] = set()
    walks = []
    for v in rot:
        for u in rot[v]:
            if (v, u) in seen:
                continue
            walk = []
            a, b = v, u
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                nbrs = rot[b]
                a, b = b, nbrs[(pos[b][a] + 1) % len(nbrs)]
            walks.append(_canonical_walk(tuple(walk)))
    return sorted(walks)


class PlaneEmbedding:
    """A plane embedding given as a rotation system.

    ``rotation[v]`` is the clockwise cyclic order of v's neighbors.  The
    constructor checks symmetry and that face tracing matches Euler's relation
    on every connected component; a rotation system that only fits a surface
    of higher genus raises NotPlane.
    """

    __slots__ = ("_rotation", "_graph", "_faces", "outer_face_hint")

    def __init__(self, rotation: Mapping[int, Sequence[int]],
                 outer_face_hint: tuple[int, ...] | None = None):
        rot: dict[int, tuple[int, ...]] = {}
        for v in sorted(rotation):
            if not isinstance(v, int) or v < 1:
                raise MalformedInput(f"vertex ids must be positive integers, got {v!r}")
            nbrs = tuple(rotation[v])
            if v in nbrs:
                raise SelfLoop(f"self-loop at vertex {v}")
            if len(set(nbrs)) != len(nbrs):
                raise InconsistentRotation(f"rotation at {v} repeats a neighbor")
            rot[v] = nbrs
        for v, nbrs in rot.items():
            for u in nbrs:
                if u not in rot:
                    raise InconsistentRotation(f"{v} lists unknown vertex {u}")
                if v not in rot[u]:
                    raise InconsistentRotation(f"{v} lists {u} but {u} does not list {v}")
        self._rotation = rot
        self._graph = Graph(rot, ((v, u) for v in rot for u in rot[v] if v < u))

        walks = _trace_orbits(rot)
        comps = connected_components(self._graph)
        edged = sum(1 for comp in comps if any(rot[v] for v in comp))
        expected = self._graph.m - self._graph.n + len(comps) + edged
        if len(walks) != expected:
            raise NotPlane(
                f"face tracing found {len(walks)} faces where a plane embedding "
                f"of this graph needs {expected}")
        if self._graph.m == 0:
            faces = [Face((), frozenset(rot))]
        else:
            faces = [Face(w, frozenset(w)) for w in walks]
        self._faces = tuple(faces)

        if outer_face_hint is not None:
            outer_face_hint = _canonical_walk(tuple(outer_face_hint))
            if outer_face_hint not in {f.walk for f in self._faces}:
                raise MalformedInput(f"outer face hint {outer_face_hint} matches no face")
        self.outer_face_hint = outer_face_hint

    @property
    def rotation(self) -> Mapping[int, tuple[int, ...]]:
        return MappingProxyType(self._rotation)

    @property
    def graph(self) -> Graph:
        return self._graph

    @property
    def faces(self) -> tuple[Face, ...]:
        return self._faces

    def __eq__(self, other) -> bool:
        return isinstance(other, PlaneEmbedding) and self._rotation == other._rotation

    def __repr__(self) -> str:
        return (f"PlaneEmbedding(n={self._graph.n}, m={self._graph.m}, "
                f"faces={len(self._faces)})")


def trace_faces(embedding: PlaneEmbedding) -> tuple[Face, ...]:
    """The faces of the embedding, in a deterministic order (sorted walks)."""
    return embedding.faces


def delete_vertices(embedding: PlaneEmbedding, drop: Iterable[int]) -> PlaneEmbedding:
    """Induced embedding on the surviving vertices.

    Rotations keep their cyclic order, restricted to surviving neighbors.
    """
    drop = frozenset(drop)
    extra = drop - set(embedding.graph.vertices)
    if extra:
        raise XNotSubset(f"vertices {sorted(extra)} are not in the embedding")
    return PlaneEmbedding({
        v: tuple(u for u in nbrs if u not in drop)
        for v, nbrs in embedding.rotation.items() if v not in drop})


def subdivide(g: Graph) -> Graph:
    """Full subdivision: every edge uv becomes a path u-x-v through a fresh
    vertex x.  Fresh identifiers continue after max(V), following the sorted
    order of the original edges, so the result is deterministic."""
    nxt = max(g.vertices, default=0) + 1
    verts = list(g.vertices)
    edges = []
    for u, v in g.edges():
        verts.append(nxt)
        edges.append((u, nxt))
        edges.append((nxt, v))
        nxt += 1
    return Graph(verts, edges)


_OUTERPLANAR_LIMIT = 30


def is_outerplanar(g: Graph) -> bool:
    """Decide outerplanarity.

    Uses the apex characterization: G is outerplanar exactly when adding a
    new vertex adjacent to all of V leaves the graph planar, which is
    equivalent to G having neither a K4 nor a K2,3 minor.
    """
    if g.n > _OUTERPLANAR_LIMIT:
        raise SizeLimit(f"outerplanarity test limited to {_OUTERPLANAR_LIMIT} vertices")
    if g.n == 0:
        return True
    h = to_networkx(g)
    apex = max(g.vertices) + 1
    h.add_edges_from((apex, v) for v in g.vertices)
    return nx.check_planarity(h, counterexample=False)[0]


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    seen: set[int] = set()
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        stack, comp = [s], {s}
        seen.add(s)
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in comp:
                    comp.add(u)
                    seen.add(u)
                    stack.append(u)
        comps.append(frozenset(comp))
    return comps


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


def embed_planar(g: Graph) -> PlaneEmbedding:
    """Some plane embedding of a planar graph, or NotPlane if none exists."""
    ok, emb = nx.check_planarity(to_networkx(g))
    if not ok:
        raise NotPlane(f"graph with {g.n} vertices and {g.m} edges is not planar")
    data = emb.get_data()
    return PlaneEmbedding({v: tuple(data[v]) for v in g.vertices})


# ---------------------------------------------------------------------------
# file formats


def _data_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _parse_int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise MalformedInput(f"{what} must be an integer, got {token!r}") from None


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    The first data line is the header ``n m``; each of the following m lines
    is one edge ``u v`` with endpoints in 1..n.  ``#`` starts a comment.
    Duplicate edges collapse; a self-loop is an error.
    """
    lines = _data_lines(text)
    if not lines:
        raise MalformedInput("empty edge-list document")
    head = lines[0].split()
    if len(head) != 2:
        raise MalformedInput(f"expected header 'n m', got {lines[0]!r}")
    n = _parse_int(head[0], "vertex count")
    m = _parse_int(head[1], "edge count")
    if n < 0 or m < 0:
        raise MalformedInput("vertex and edge counts must be non-negative")
    if len(lines) - 1 != m:
        raise MalformedInput(f"header announces {m} edges but {len(lines) - 1} lines follow")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise MalformedInput(f"expected edge 'u v', got {line!r}")
        u = _parse_int(parts[0], "edge endpoint")
        v = _parse_int(parts[1], "edge endpoint")
        for w in (u, v):
            if not 1 <= w <= n:
                raise MalformedInput(f"endpoint {w} outside 1..{n}")
        edges.append((u, v))
    return Graph(range(1, n + 1), edges)


def _relabel(vertices: Sequence[int]) -> tuple[dict[int, int], list[str]]:
    idx = {v: i for i, v in enumerate(vertices, start=1)}
    header = []
    if any(v != i for v, i in idx.items()):
        header.append("# vertex map: file id = original id")
        header.extend(f"# {i} = {v}" for v, i in idx.items())
    return idx, header


def serialize_graph(g: Graph) -> str:
    """Render a graph in the edge-list format.

    Vertices are renumbered 1..n in increasing id order; if that changes any
    id, a ``# vertex map`` comment block records the original ids.
    """
    idx, out = _relabel(g.vertices)
    out.append(f"{g.n} {g.m}")
    out.extend(f"{idx[u]} {idx[v]}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def parse_embedding(text: str) -> PlaneEmbedding:
    """Parse the rotation-system format.

    The first data line is the vertex count ``n``; each of the following n
    lines reads ``v: u1 u2 ... ud`` listing v's neighbors in clockwise order
    (possibly none).  Adjacency is derived from the rotations and must be
    symmetric.
    """
    lines = _data_lines(text)
    if not lines:
        raise MalformedInput("empty rotation document")
    head = lines[0].split()
    if len(head) != 1:
        raise MalformedInput(f"expected header 'n', got {lines[0]!r}")
    n = _parse_int(head[0], "vertex count")
    if n < 0:
        raise MalformedInput("vertex count must be non-negative")
    if len(lines) - 1 != n:
        raise MalformedInput(f"header announces {n} vertices but {len(lines) - 1} lines follow")
    rotation: dict[int, tuple[int, ...]] = {}
    for line in lines[1:]:
        left, sep, right = line.partition(":")
        if not sep:
            raise MalformedInput(f"expected 'v: neighbors', got {line!r}")
        v = _parse_int(left.strip(), "vertex id")
        if not 1 <= v <= n:
            raise MalformedInput(f"vertex {v} outside 1..{n}")
        if v in rotation:
            raise MalformedInput(f"vertex {v} listed twice")
        nbrs = tuple(_parse_int(t, "neighbor id") for t in right.split())
        for u in nbrs:
            if not 1 <= u <= n:
                raise MalformedInput(f"neighbor {u} outside 1..{n}")
        rotation[v] = nbrs
    return PlaneEmbedding(rotation)


def serialize_embedding(embedding: PlaneEmbedding) -> str:
    """Render an embedding in the rotation-system format (with a vertex map
    comment block when ids are renumbered)."""
    g = embedding.graph
    idx, out = _relabel(g.vertices)
    out.append(str(g.n))
    out.extend(
        f"{idx[v]}: " + " ".join(str(idx[u]) for u in embedding.rotation[v])
        if embedding.rotation[v] else f"{idx[v]}:"
        for v in g.vertices)
    return "\n".join(out) + "\n"


def parse_coloring(text: str) -> ColorAssignment:
    """Parse the coloring format: one line ``v c`` per vertex."""
    colors: dict[int, int] = {}
    for line in _data_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise MalformedInput(f"expected 'v c', got {line!r}")
        v = _parse_int(parts[0], "vertex id")
        c = _parse_int(parts[1], "color")
        if v in colors:
            raise MalformedInput(f"vertex {v} colored twice")
        if v < 1:
            raise MalformedInput(f"vertex id {v} must be positive")
        if c < 1:
            raise MalformedInput(f"color {c} must be positive")
        colors[v] = c
    return ColorAssignment(colors)


def serialize_coloring(colors: Mapping[int, int] | ColorAssignment) -> str:
    return "".join(f"{v} {c}\n" for v, c in sorted(colors.items()))


def to_dot(g: Graph, colors: Mapping[int, int] | ColorAssignment | None = None) -> str:
    """DOT rendering for visual inspection; colors become node labels."""
    out = ["graph {"]
    for v in g.vertices:
        if colors is not None and v in colors:
            out.append(f'  {v} [label="{v}:{colors[v]}"];')
        else:
            out.append(f"  {v};")
    out.extend(f"  {u} -- {v};" for u, v in g.edges())
    out.append("}")
    return "\n".join(out) + "\n"
