"""Named lower-bound graphs, each carrying its claimed chromatic values.

Every generator is deterministic and labeled; the claimed values are frozen
only after the exact solver confirmed them (witness at the value, exhaustion
one below), so the solver is the arbiter against transcription slips.  Where
a construction left freedom (vertex identification order in the glued
gadgets), the variant satisfying planarity and the claimed value was adopted.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Mapping

from .errors import UnknownGadget
from .graphs import Graph
from .instances import cycle
from .variants import VariantSpec


@dataclass(frozen=True)
class GadgetSpec:
    """A gadget: its graph, claimed (variant, value) pairs, and labels.

    ``source`` says how the adjacency was obtained; ``labels`` maps vertex
    identifiers to the names used in the accompanying write-up of each
    construction.
    """

    name: str
    graph: Graph
    claimed: tuple[tuple[VariantSpec, int], ...]
    source: str
    labels: Mapping[int, str]


def _fritsch() -> tuple[Graph, dict[int, str], str]:
    adj = {
        1: (2, 3, 4, 7, 8),
        2: (1, 3, 5, 8, 9),
        3: (1, 2, 6, 7, 9),
        4: (1, 5, 6, 7, 8),
        5: (2, 4, 6, 8, 9),
        6: (3, 4, 5, 7, 9),
        7: (1, 3, 4, 6),
        8: (1, 2, 4, 5),
        9: (2, 3, 5, 6),
    }
    edges = sorted({(min(u, v), max(u, v)) for u in adj for v in adj[u]})
    labels = {i: f"x{i}" for i in range(1, 10)}
    return Graph(range(1, 10), edges), labels, "triaugmented triangular prism"


def _wheel_hubs(two_rings: bool) -> tuple[Graph, dict[int, str], str]:
    """Hub triangle with link vertices and one or two 5-rings per hub."""
    labels = {1: "x0", 2: "y0", 3: "z0", 4: "x1", 5: "y1", 6: "z1"}
    edges = [(1, 2), (2, 3), (1, 3), (1, 4), (2, 4), (2, 5), (3, 5), (1, 6), (3, 6)]
    nxt = 7
    for hub, tag in ((1, "x"), (2, "y"), (3, "z")):
        for w in range(1, 3 if two_rings else 2):
            ring = list(range(nxt, nxt + 5))
            nxt += 5
            for i, v in enumerate(ring, start=1):
                labels[v] = f"{tag}w{w}{i}"
            edges += [(ring[i], ring[(i + 1) % 5]) for i in range(5)]
            edges += [(hub, v) for v in ring]
    g = Graph(range(1, nxt), sorted((min(u, v), max(u, v)) for u, v in edges))
    kind = "two disjoint 5-rings" if two_rings else "one 5-ring"
    return g, labels, f"triangle of hubs with link vertices and {kind} per hub"


def _o_iumo() -> tuple[Graph, dict[int, str], str]:
    labels = {1: "x0", 2: "x1", 3: "y0", 4: "y1", 5: "z0", 6: "z1",
              7: "y2", 8: "z2", 9: "p", 10: "q", 11: "r"}
    edges = [(1, 3), (1, 5), (1, 7), (1, 8), (2, 1), (2, 3), (4, 3), (4, 5),
             (6, 5), (6, 1), (9, 1), (9, 7), (10, 1), (10, 8), (11, 7), (11, 8)]
    g = Graph(range(1, 12), sorted((min(u, v), max(u, v)) for u, v in edges))
    return g, labels, "outerplanar hub with three link paths and a capped pair"


def _h_iumo() -> tuple[Graph, dict[int, str], str]:
    labels = {1: "x0", 2: "y0", 3: "w0", 4: "z0", 5: "y1", 6: "w1", 7: "z1"}
    edges = [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)]
    nxt = 8
    for tag, quad in (("t", (1, 2, 3, 4)), ("u", (1, 5, 6, 7))):
        for i, (a, b) in enumerate(itertools.combinations(quad, 2), start=1):
            labels[nxt] = f"{tag}{i}"
            edges += [(a, nxt), (b, nxt)]
            nxt += 1
    g = Graph(range(1, nxt), sorted((min(u, v), max(u, v)) for u, v in edges))
    return g, labels, "central vertex with two subdivided-K4 layers"


_H_COPY_X = [f"x{i}" for i in range(4)]


def _h_cf_copy(tag: str) -> tuple[list[tuple[str, str]], list[tuple]]:
    """One 7-vertex block: K4 on x0..x3 plus a y-vertex on each x0-triangle."""
    x = [(tag, n) for n in _H_COPY_X]
    y = [(tag, f"y{i}") for i in range(1, 4)]
    edges = list(itertools.combinations(x, 2))
    edges += [(y[0], x[0]), (y[0], x[1]), (y[0], x[2])]
    edges += [(y[1], x[0]), (y[1], x[2]), (y[1], x[3])]
    edges += [(y[2], x[0]), (y[2], x[3]), (y[2], x[1])]
    return x + y, edges


def _h_pcfo() -> tuple[Graph, dict[int, str], str]:
    verts: list[tuple[str, str]] = []
    edges: list[tuple] = []
    for tag in "ABCD":
        v, e = _h_cf_copy(tag)
        verts += v
        edges += e
    merges = [(("A", "x1"), ("B", "x2")), (("B", "x1"), ("C", "x2")),
              (("C", "x1"), ("D", "x2")), (("D", "x1"), ("A", "x2")),
              (("A", "x3"), ("C", "x3"))]
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for a, b in merges:
        parent[find(b)] = find(a)
    groups: dict[tuple, list[tuple]] = {}
    for v in verts:
        groups.setdefault(find(v), []).append(v)
    reps = sorted(groups)
    num = {r: i + 1 for i, r in enumerate(reps)}
    labels = {
        num[r]: "=".join(f"{t}.{n}" for t, n in sorted(groups[r])) for r in reps
    }
    es = sorted({
        (min(a, b), max(a, b))
        for u, v in edges
        for a, b in [(num[find(u)], num[find(v)])]
    })
    g = Graph(range(1, len(reps) + 1), es)
    return g, labels, "four 7-vertex blocks glued at five outer vertices"


def _o_pumc() -> tuple[Graph, dict[int, str], str]:
    labels = {1: "h1", 2: "h2", 3: "h3"}
    edges = [(1, 2), (2, 3), (1, 3)]
    for t in range(3):
        hub, nxt_hub = t + 1, (t + 1) % 3 + 1
        seg = [4 + 6 * t + i for i in range(6)]
        for i, v in enumerate(seg, start=1):
            labels[v] = f"s{t + 1}x{i}"
        edges += [(seg[i], seg[i + 1]) for i in range(5)]
        edges += [(hub, v) for v in seg]
        edges.append((nxt_hub, seg[5]))
    g = Graph(range(1, 22), sorted((min(u, v), max(u, v)) for u, v in edges))
    return g, labels, "hub triangle with a fanned 6-path between consecutive hubs"


_H_PUMO_ARCS = ((1, 2), (2, 3), (3, 1), (1, 4), (2, 4), (4, 3))


def _h_pumo() -> tuple[Graph, dict[int, str], str]:
    labels = {i: f"x{i}" for i in range(1, 5)}
    edges: list[tuple[int, int]] = []
    for a, (tail, head) in enumerate(_H_PUMO_ARCS):
        y = {i: 5 + 6 * a + (i - 1) for i in range(1, 7)}
        for i, v in y.items():
            labels[v] = f"a{a + 1}.y{i}"
        edges += list(itertools.combinations([tail, y[1], y[2], y[3]], 2))
        edges += list(itertools.combinations([tail, y[5], y[6], head], 2))
        edges += [(y[4], tail), (y[4], y[3]), (y[4], y[5]), (y[3], y[5])]
    g = Graph(range(1, 41), sorted({(min(u, v), max(u, v)) for u, v in edges}))
    return g, labels, "an 8-vertex block substituted for every arc of an oriented K4"


_CYCLE_NAME = re.compile(r"^C_(?:n\((\d+)\)|(\d+))$")


def _cycle_value(n: int) -> int:
    # chromatic number of the squared cycle
    if n % 3 == 0:
        return 3
    if n == 5:
        return 5
    return 4


_BUILDERS = {
    "fritsch": _fritsch,
    "G3": lambda: _wheel_hubs(False),
    "G3prime": lambda: _wheel_hubs(True),
    "O_iUMo": _o_iumo,
    "H_iUMo": _h_iumo,
    "H_pCFo": _h_pcfo,
    "O_pUMc": _o_pumc,
    "H_pUMo": _h_pumo,
}

_CLAIMS = {
    "fritsch": (("pUMo", 6),),
    "G3": (("iCFc", 3),),
    "G3prime": (("iUMc", 4),),
    "O_iUMo": (("iUMo", 4),),
    "H_iUMo": (("iUMo", 5),),
    "H_pCFo": (("pCFo", 6),),
    "O_pUMc": (("pUMc", 5),),
    "H_pUMo": (("pUMc", 6),),
}


def gadget_names() -> tuple[str, ...]:
    """Fixed gadget names plus the parametric cycle family C_n(k)."""
    return tuple(_BUILDERS) + ("C_n(n)",)


def _parse(name: str) -> tuple[str, int | None]:
    if name in _BUILDERS:
        return name, None
    m = _CYCLE_NAME.match(name)
    if m:
        n = int(m.group(1) or m.group(2))
        if n >= 3:
            return "C_n", n
    raise UnknownGadget(f"no gadget named {name!r}; known: {', '.join(gadget_names())}")


def gadget_spec(name: str) -> GadgetSpec:
    """Build the named gadget together with its claims and labels."""
    base, n = _parse(name)
    if base == "C_n":
        g = cycle(n)
        return GadgetSpec(
            name=f"C_n({n})",
            graph=g,
            claimed=((VariantSpec.from_code("pCFo"), _cycle_value(n)),),
            source="cycle; the open-neighborhood CF value equals the chromatic "
            "number of the squared cycle",
            labels={v: f"v{v}" for v in g.vertices},
        )
    g, labels, source = _BUILDERS[base]()
    claimed = tuple(
        (VariantSpec.from_code(code), value) for code, value in _CLAIMS[base]
    )
    return GadgetSpec(name=base, graph=g, claimed=claimed, source=source, labels=labels)


def generate(name: str) -> Graph:
    """The named gadget's graph; raises UnknownGadget for unrecognized names."""
    return gadget_spec(name).graph


def claimed_values(name: str) -> list[tuple[VariantSpec, int]]:
    """The gadget's claimed (variant, chromatic value) pairs."""
    return list(gadget_spec(name).claimed)
