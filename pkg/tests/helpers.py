"""Shared test oracles: naive enumeration, minor containment, corpora."""

from __future__ import annotations

import itertools
import random

from cfum import ColorAssignment, Graph, PlaneEmbedding, check, instances
from cfum.variants import VariantSpec


def solver_vertex_order(g: Graph) -> list[int]:
    """The fixed order the exact solver assigns in: degree desc, id asc."""
    return sorted(g.vertices, key=lambda v: (-g.degree(v), v))


def naive_exists(instance, variant: VariantSpec, k: int) -> dict[int, int] | None:
    """First valid assignment in the solver's lexicographic order, by full
    enumeration of all k^n assignments.  Exercises only variants.check."""
    g = instance.graph if isinstance(instance, PlaneEmbedding) else instance
    order = solver_vertex_order(g)
    for values in itertools.product(range(1, k + 1), repeat=len(order)):
        sigma = dict(zip(order, values))
        if check(instance, ColorAssignment(sigma, palette_size=k), variant) is None:
            return sigma
    return None


def has_minor(g: Graph, h: Graph) -> bool:
    """Brute-force minor test: assign g's vertices to branch sets (or none),
    then demand non-empty connected sets with all of h's adjacencies."""
    hv = list(h.vertices)
    gv = list(g.vertices)
    k = len(hv)
    if g.n < k:
        return False
    adj = {v: set(g.neighbors(v)) for v in gv}

    def connected(part: list[int], partset: set[int]) -> bool:
        todo, seen = [part[0]], {part[0]}
        while todo:
            for u in adj[todo.pop()]:
                if u in seen or u not in partset:
                    continue
                seen.add(u)
                todo.append(u)
        return len(seen) == len(part)

    for labels in itertools.product(range(-1, k), repeat=len(gv)):
        parts: list[list[int]] = [[] for _ in range(k)]
        for v, lab in zip(gv, labels):
            if lab >= 0:
                parts[lab].append(v)
        if any(not p for p in parts):
            continue
        ok = True
        for p in parts:
            if not connected(p, set(p)):
                ok = False
                break
        if not ok:
            continue
        for i, j in h.edges():
            a, b = parts[hv.index(i)], parts[hv.index(j)]
            if not any(y in adj[x] for x in a for y in b):
                ok = False
                break
        if ok:
            return True
    return False


def all_graphs_on(n: int):
    """Every labeled graph on vertices 1..n, one per edge subset."""
    vs = list(range(1, n + 1))
    pairs = [(u, v) for u in vs for v in vs if u < v]
    for bits in itertools.product((False, True), repeat=len(pairs)):
        yield Graph(vs, [p for p, keep in zip(pairs, bits) if keep])


K4 = instances.complete(4)
K23 = Graph(range(1, 6), [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])


def outerplanar_by_minors(g: Graph) -> bool:
    return not has_minor(g, K4) and not has_minor(g, K23)


def named_small_graphs() -> list[tuple[str, Graph]]:
    out = [(f"C{n}", instances.cycle(n)) for n in (3, 4, 5, 6)]
    out += [(f"K{n}", instances.complete(n)) for n in (2, 3, 4)]
    out += [
        ("P4", instances.path(4)),
        ("star4", instances.star(4)),
        ("wheel5", instances.wheel(5)),
        ("fan4", instances.fan(4)),
        ("glued", instances.glued_squares()),
    ]
    return out


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random connected graph: spanning tree plus a random batch of extras."""
    vs = list(range(1, n + 1))
    edges = set()
    for v in vs[1:]:
        edges.add((rng.randint(1, v - 1), v))
    extras = rng.randint(0, n)
    pairs = [(u, v) for u in vs for v in vs if u < v]
    for u, v in rng.sample(pairs, min(extras, len(pairs))):
        if (u, v) not in edges:
            edges.add((u, v))
    return Graph(vs, sorted(edges))
