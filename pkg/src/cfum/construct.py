"""Constructive colorings: greedy partition, closure pipelines, facial
subroutines, and the recursive outerplanar algorithm.

The four pipelines (`color_iumc`, `color_pcfo`, `color_pumo`, `color_pumc`)
share one shape: split the vertices into an independent dominating class and
the rest, take the facial closure that deletes one side, and color the
survivors so that every deleted vertex sees a unique (or unique-maximum)
color among its surviving neighbors.  Keeping the two sides on disjoint
consecutive palettes then makes the combined coloring valid for the target
variant at 6, 8, 10, and 8 colors respectively.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .closure import ClosureResult, facial_closure
from .errors import (
    BoundViolated,
    IsolatedVertex,
    MalformedInput,
    SizeLimit,
    StructureError,
    Timeout,
)
from .exact import (
    DEFAULT_TIME_BUDGET,
    SET_CF,
    SET_CF_DESIGNATED,
    SET_UM,
    proper_coloring,
    search_coloring,
)
from .graphs import ColorAssignment, Face, Graph, PlaneEmbedding, is_outerplanar
from .variants import CONFLICT_FREE, FACIAL, PROPER, UNIQUE_MAX, VariantSpec, check


@dataclass(frozen=True)
class Partition:
    """A 2-partition of the vertex set with v1 dominating."""

    v1: frozenset[int]
    v2: frozenset[int]


class UniqueVertexChoice(dict):
    """Mapping from a Face to its designated vertex, which must lie on it."""


def greedy_first_fit(g: Graph, order: Sequence[int] | None = None) -> ColorAssignment:
    """Proper coloring by first fit along ``order`` (identifier order by default).

    Color class 1 is a maximal independent set: a vertex misses color 1 only
    because a neighbor already has it, so every vertex is in class 1 or
    adjacent to it.
    """
    if order is None:
        order = g.vertices
    else:
        order = list(order)
        if sorted(order) != list(g.vertices):
            raise MalformedInput("order must be a permutation of the vertex set")
    colors: dict[int, int] = {}
    for v in order:
        taken = {colors[u] for u in g.neighbors(v) if u in colors}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return ColorAssignment(colors)


def greedy_partition(g: Graph, order: Sequence[int] | None = None) -> Partition:
    """Partition into the first-fit color-1 class (independent, dominating) and the rest."""
    colors = greedy_first_fit(g, order)
    v1 = frozenset(v for v in g.vertices if colors[v] == 1)
    return Partition(v1, frozenset(g.vertices) - v1)


def dominating_four_coloring(
    embedding: PlaneEmbedding, *, time_budget: float | None = DEFAULT_TIME_BUDGET
) -> ColorAssignment:
    """Proper 4-coloring whose class 4 is independent and dominating.

    An exact proper 4-coloring (guaranteed for plane embeddings) is
    post-processed in ascending vertex order: any vertex that neither has
    color 4 nor a color-4 neighbor is recolored 4.  One pass reaches the
    fixpoint, keeps class 4 independent, and makes it inclusion-maximal,
    hence dominating.
    """
    g = embedding.graph
    base = proper_coloring(g, 4, time_budget=time_budget)
    if base is None:
        raise BoundViolated(
            "no proper 4-coloring exists; the input cannot be a plane embedding"
        )
    colors = {v: base[v] for v in g.vertices}
    for v in g.vertices:
        if colors[v] != 4 and all(colors[u] != 4 for u in g.neighbors(v)):
            colors[v] = 4
    return ColorAssignment(colors, palette_size=4)


def _consecutive_palette(palette: Sequence[int], size: int | None = None) -> tuple[int, ...]:
    p = tuple(palette)
    if size is not None and len(p) != size:
        raise MalformedInput(f"palette must hold {size} colors, got {len(p)}")
    if not p or p[0] < 1 or any(b != a + 1 for a, b in zip(p, p[1:])):
        raise MalformedInput(f"palette must be consecutive positive colors, got {p!r}")
    return p


def _remap(colors: ColorAssignment, palette: tuple[int, ...]) -> ColorAssignment:
    """Order-map rank colors 1..len(palette) onto the palette."""
    return ColorAssignment(
        {v: palette[c - 1] for v, c in colors.items()}, palette_size=palette[-1]
    )


def facial_cf_coloring(
    embedding: PlaneEmbedding,
    zeta: Mapping[Face, int] | None = None,
    palette: Sequence[int] = (1, 2, 3, 4),
    *,
    time_budget: float | None = DEFAULT_TIME_BUDGET,
) -> ColorAssignment:
    """Proper facial-CF coloring on a 4-color palette.

    ``zeta`` may designate, per face, the vertex whose color is to be unique
    on that face; unlisted faces default to their lowest-identifier vertex.
    The primary method joins each designated vertex to every other vertex of
    its face and properly 4-colors the augmented graph (which stays plane, so
    a 4-coloring exists and the designated colors come out unique).  If that
    search times out, a direct search with designated-unique face constraints
    takes over.
    """
    palette = _consecutive_palette(palette, 4)
    g = embedding.graph
    if zeta is not None:
        unknown = set(zeta) - set(embedding.faces)
        if unknown:
            raise MalformedInput(f"zeta mentions {len(unknown)} unknown face(s)")
    chosen: dict[Face, int] = {}
    for f in embedding.faces:
        if not f.boundary:
            continue
        z = zeta[f] if zeta is not None and f in zeta else min(f.boundary)
        if z not in f.boundary:
            raise MalformedInput(f"designated vertex {z} is not on its face")
        chosen[f] = z

    aug = set(g.edges())
    for f, z in chosen.items():
        aug.update((min(z, u), max(z, u)) for u in f.boundary if u != z)
    try:
        ranks = proper_coloring(Graph(g.vertices, sorted(aug)), 4, time_budget=time_budget)
    except Timeout:
        constraints = [
            (SET_CF_DESIGNATED, [z, *sorted(f.boundary - {z})])
            for f, z in chosen.items()
        ]
        ranks = search_coloring(
            g,
            4,
            constraints,
            proper=True,
            symmetry_break=True,
            time_budget=time_budget,
        )
    if ranks is None:
        raise BoundViolated(
            "4 colors did not suffice for a facial-CF coloring of a plane embedding"
        )
    out = _remap(ranks, palette)
    assert check(embedding, out, VariantSpec(PROPER, CONFLICT_FREE, FACIAL)) is None
    assert all(
        sum(1 for u in f.boundary if out[u] == out[z]) == 1 for f, z in chosen.items()
    )
    return out


def facial_um_coloring(
    embedding: PlaneEmbedding,
    palette: Sequence[int] = (1, 2, 3, 4, 5),
    *,
    time_budget: float | None = DEFAULT_TIME_BUDGET,
) -> ColorAssignment:
    """Proper facial-UM coloring on a 5-color palette, by direct exact search.

    Ranks are order-mapped onto the palette (smallest palette color = rank 1),
    which preserves the unique-maximum structure because the palette is
    consecutive.
    """
    palette = _consecutive_palette(palette, 5)
    constraints = [
        (SET_UM, sorted(f.boundary)) for f in embedding.faces if f.boundary
    ]
    ranks = search_coloring(
        embedding.graph,
        5,
        constraints,
        proper=True,
        symmetry_break=False,
        time_budget=time_budget,
    )
    if ranks is None:
        raise BoundViolated(
            "5 colors did not suffice for a facial-UM coloring of a plane embedding"
        )
    out = _remap(ranks, palette)
    assert check(embedding, out, VariantSpec(PROPER, UNIQUE_MAX, FACIAL)) is None
    return out


def constrained_facial_coloring(
    closure: ClosureResult,
    rule: str,
    palette: Sequence[int],
    *,
    time_budget: float | None = DEFAULT_TIME_BUDGET,
) -> ColorAssignment:
    """Properly color a closure graph so every constraint set obeys the rule.

    Constraint sets of size ≥ 2 must contain a unique color (CF) or hold
    their maximum color exactly once (UM); smaller sets satisfy either rule
    trivially.  With 4 (CF) or 5 (UM) consecutive colors a solution always
    exists, because the sets trace faces or edges of a plane graph; running
    out of palette therefore raises BoundViolated.
    """
    if rule not in (CONFLICT_FREE, UNIQUE_MAX):
        raise MalformedInput(f"rule must be {CONFLICT_FREE!r} or {UNIQUE_MAX!r}")
    palette = _consecutive_palette(palette)
    flavor = SET_CF if rule == CONFLICT_FREE else SET_UM
    constraints = [
        (flavor, members)
        for members in closure.constraint_sets.values()
        if len(members) >= 2
    ]
    ranks = search_coloring(
        closure.closure_graph,
        len(palette),
        constraints,
        proper=True,
        symmetry_break=rule == CONFLICT_FREE,
        time_budget=time_budget,
    )
    if ranks is None:
        raise BoundViolated(
            f"{len(palette)} colors did not suffice for a {rule} closure coloring"
        )
    return _remap(ranks, palette)


def color_iumc(
    embedding: PlaneEmbedding, *, time_budget: float | None = DEFAULT_TIME_BUDGET
) -> ColorAssignment:
    """iUMc coloring with at most 6 colors.

    The greedy class-1 vertices (independent, dominating) are recolored from
    {2..6} so that every deleted vertex's surviving neighborhood has a unique
    maximum; everything else keeps color 1.  A class-2..6 vertex then has only
    1-colored neighbors, and a 1-colored vertex's closed-neighborhood maximum
    is the unique maximum over its class-1 neighbors.
    """
    part = greedy_partition(embedding.graph)
    closure = facial_closure(embedding, part.v2)
    high = constrained_facial_coloring(
        closure, UNIQUE_MAX, (2, 3, 4, 5, 6), time_budget=time_budget
    )
    colors = {v: 1 for v in part.v2}
    colors.update(high.items())
    out = ColorAssignment(colors, palette_size=6)
    assert check(embedding.graph, out, VariantSpec.from_code("iUMc")) is None
    return out


def _bipartite_closure_coloring(
    embedding: PlaneEmbedding,
    rule: str,
    low: tuple[int, ...],
    high: tuple[int, ...],
    time_budget: float | None,
) -> ColorAssignment:
    """Shared pipeline of color_pcfo and color_pumo.

    Partition V into the greedy class V1 and the rest; color V1 from the high
    palette against the closure deleting V2, and V2 from the low palette
    against the closure deleting V1.  Every vertex's open neighborhood either
    equals a V1-side constraint set (for V1 vertices, whose neighbors all lie
    in V2) or meets V1 in one (for V2 vertices), and the disjoint palettes
    keep those sets' witnesses unique in the full neighborhood.
    """
    g = embedding.graph
    for v in g.vertices:
        if g.degree(v) == 0:
            raise IsolatedVertex(
                f"vertex {v} has no neighbors; open-neighborhood rules are undefined"
            )
    part = greedy_partition(g)
    colors = dict(
        constrained_facial_coloring(
            facial_closure(embedding, part.v2), rule, high, time_budget=time_budget
        ).items()
    )
    colors.update(
        constrained_facial_coloring(
            facial_closure(embedding, part.v1), rule, low, time_budget=time_budget
        ).items()
    )
    return ColorAssignment(colors, palette_size=high[-1])


def color_pcfo(
    embedding: PlaneEmbedding, *, time_budget: float | None = DEFAULT_TIME_BUDGET
) -> ColorAssignment:
    """pCFo coloring with at most 8 colors: CF closures on palettes {5..8}/{1..4}."""
    out = _bipartite_closure_coloring(
        embedding, CONFLICT_FREE, (1, 2, 3, 4), (5, 6, 7, 8), time_budget
    )
    assert check(embedding.graph, out, VariantSpec.from_code("pCFo")) is None
    return out


def color_pumo(
    embedding: PlaneEmbedding, *, time_budget: float | None = DEFAULT_TIME_BUDGET
) -> ColorAssignment:
    """pUMo coloring with at most 10 colors: UM closures on palettes {6..10}/{1..5}."""
    out = _bipartite_closure_coloring(
        embedding, UNIQUE_MAX, (1, 2, 3, 4, 5), (6, 7, 8, 9, 10), time_budget
    )
    assert check(embedding.graph, out, VariantSpec.from_code("pUMo")) is None
    return out


def color_pumc(
    embedding: PlaneEmbedding, *, time_budget: float | None = DEFAULT_TIME_BUDGET
) -> ColorAssignment:
    """pUMc coloring with at most 8 colors.

    Start from a dominating 4-coloring; class 4 (independent, dominating) is
    recolored from {4..8} against the closure deleting the rest, while
    classes 1..3 keep their colors.  Every vertex's closed-neighborhood
    maximum then lands on a class-4 vertex (or on the vertex itself) exactly
    once.
    """
    g = embedding.graph
    base = dominating_four_coloring(embedding, time_budget=time_budget)
    v1 = frozenset(v for v in g.vertices if base[v] == 4)
    closure = facial_closure(embedding, frozenset(g.vertices) - v1)
    high = constrained_facial_coloring(
        closure, UNIQUE_MAX, (4, 5, 6, 7, 8), time_budget=time_budget
    )
    colors = {v: base[v] for v in g.vertices if v not in v1}
    colors.update(high.items())
    out = ColorAssignment(colors, palette_size=8)
    assert check(g, out, VariantSpec.from_code("pUMc")) is None
    return out


def find_triangle_two_vertex(g: Graph) -> tuple[int, int, int] | None:
    """Lowest-identifier degree-2 vertex whose two neighbors are adjacent."""
    for v in g.vertices:
        if g.degree(v) == 2:
            v1, v2 = g.neighbors(v)
            if g.has_edge(v1, v2):
                return v, v1, v2
    return None


def color_pumo_outerplanar(g: Graph) -> ColorAssignment:
    """pUMo coloring of an outerplanar graph with at most 5 colors.

    Peels the graph by the first applicable reduction, then replays the peel
    in reverse, extending the coloring:

    R0  a component on ≤ 2 vertices is colored (1) or (1, 2) directly;
    R1  a degree-1 vertex v with neighbor v1 avoids σ(v1) and μ(v1);
    R2  adjacent degree-2 vertices v, w with outer neighbors v1, w1:
        v avoids {σ(v1), μ(v1), σ(w1)}, then w avoids {σ(v), σ(v1), σ(w1),
        μ(w1)};
    R3  a degree-2 vertex v on a triangle v1 v2 avoids {σ(v1), σ(v2), μ(v1),
        μ(v2)}.

    Here μ(u) is u's neighborhood maximum in the already-colored part, and
    vertices isolated mid-peel are exempt from the unique-maximum rule (each
    regains a neighbor before the input graph is fully restored, so the final
    coloring is valid outright).  Every reduction leaves at least 3, 2, 1, 1
    admissible colors respectively; the lowest one is taken.

    Raises IsolatedVertex for isolated input vertices and StructureError when
    no reduction applies, which certifies the input is not outerplanar.
    """
    for v in g.vertices:
        if g.degree(v) == 0:
            raise IsolatedVertex(
                f"vertex {v} has no neighbors; open-neighborhood rules are undefined"
            )
    try:
        if not is_outerplanar(g):
            raise StructureError("input graph is not outerplanar")
    except SizeLimit:
        pass  # too large to validate; trusted, and the peel itself will object

    adj: dict[int, set[int]] = {v: set(g.neighbors(v)) for v in g.vertices}

    def remove(v: int) -> None:
        for u in adj.pop(v):
            adj[u].discard(v)

    def component_of(v: int) -> set[int]:
        comp, frontier = {v}, [v]
        while frontier:
            for u in adj[frontier.pop()]:
                if u not in comp:
                    comp.add(u)
                    frontier.append(u)
        return comp

    steps: list[tuple[str, tuple[int, ...]]] = []
    while adj:
        small = None
        for v in sorted(adj):
            comp = component_of(v)
            if len(comp) <= 2:
                small = tuple(sorted(comp))
                break
        if small is not None:
            steps.append(("R0", small))
            for v in small:
                remove(v)
            continue
        leaf = next((v for v in sorted(adj) if len(adj[v]) == 1), None)
        if leaf is not None:
            steps.append(("R1", (leaf, next(iter(adj[leaf])))))
            remove(leaf)
            continue
        pair = None
        for v in sorted(adj):
            if len(adj[v]) != 2:
                continue
            for w in sorted(adj[v]):
                if len(adj[w]) == 2:
                    v1 = next(u for u in adj[v] if u != w)
                    w1 = next(u for u in adj[w] if u != v)
                    pair = (v, w, v1, w1)
                    break
            if pair:
                break
        if pair is not None:
            steps.append(("R2", pair))
            remove(pair[0])
            remove(pair[1])
            continue
        triple = None
        for v in sorted(adj):
            if len(adj[v]) == 2:
                v1, v2 = sorted(adj[v])
                if v2 in adj[v1]:
                    triple = (v, v1, v2)
                    break
        if triple is None:
            raise StructureError(
                "no reduction applies; the input graph is not outerplanar"
            )
        steps.append(("R3", triple))
        remove(triple[0])

    colors: dict[int, int] = {}
    restored: dict[int, set[int]] = {}

    def mu(u: int) -> int | None:
        return max((colors[x] for x in restored[u]), default=None)

    def add_back(v: int) -> None:
        nbrs = {u for u in g.neighbors(v) if u in restored}
        restored[v] = nbrs
        for u in nbrs:
            restored[u].add(v)

    def lowest(avoid: set[int | None], slack: int) -> int:
        free = [c for c in range(1, 6) if c not in avoid]
        assert len(free) >= slack, f"reduction slack violated: {len(free)} < {slack}"
        return free[0]

    for kind, data in reversed(steps):
        if kind == "R0":
            for rank, v in enumerate(data, start=1):
                add_back(v)
                colors[v] = rank
        elif kind == "R1":
            v, v1 = data
            c = lowest({colors[v1], mu(v1)}, 3)
            add_back(v)
            colors[v] = c
        elif kind == "R2":
            v, w, v1, w1 = data
            mu_v1, mu_w1 = mu(v1), mu(w1)
            cv = lowest({colors[v1], mu_v1, colors[w1]}, 2)
            add_back(v)
            colors[v] = cv
            cw = lowest({cv, colors[v1], colors[w1], mu_w1}, 1)
            add_back(w)
            colors[w] = cw
        else:
            v, v1, v2 = data
            c = lowest({colors[v1], colors[v2], mu(v1), mu(v2)}, 1)
            add_back(v)
            colors[v] = c

    out = ColorAssignment(colors, palette_size=5)
    assert check(g, out, VariantSpec.from_code("pUMo")) is None
    return out
