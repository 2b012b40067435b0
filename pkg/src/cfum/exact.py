"""Exact search: existence queries and chromatic numbers for every variant.

All entry points funnel into one backtracking engine (`search_coloring`),
which in turn drives the kernel in :mod:`cfum._kernel`.  The engine colors
vertices in a fixed order (descending degree, ties by identifier) and tries
colors in ascending order, so the returned witness is always the
lexicographically first valid assignment under that order, independent of
whether the kernel runs compiled or interpreted.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from time import monotonic
from typing import Iterable, Sequence

import networkx as nx

from . import _kernel
from .errors import (
    BoundViolated,
    IsolatedVertex,
    MalformedInput,
    MissingEmbedding,
    Timeout,
)
from .graphs import ColorAssignment, Graph, PlaneEmbedding, to_networkx
from .variants import (
    CONFLICT_FREE,
    FACIAL,
    OPEN,
    PROPER,
    UNIQUE_MAX,
    VariantSpec,
    check,
)

EXACT = "exact"
LOWER_BOUND_ONLY = "lower-bound-only"
TIMEOUT = "timeout"

# Constraint-set flavors understood by search_coloring.
SET_CF = 1  # some color must appear exactly once in the set
SET_UM = 2  # the maximum color in the set must appear exactly once
SET_CF_DESIGNATED = 3  # the first member's color must appear exactly once

DEFAULT_TIME_BUDGET = 60.0


@dataclass(frozen=True)
class SolveRequest:
    """One chromatic-number query: instance, variant, and budgets."""

    instance: Graph | PlaneEmbedding
    variant: VariantSpec
    max_colors: int | None = None
    time_budget: float | None = DEFAULT_TIME_BUDGET

    def __post_init__(self):
        if self.max_colors is not None and self.max_colors < 1:
            raise MalformedInput(f"max_colors must be >= 1, got {self.max_colors}")


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a chromatic-number query.

    ``value`` is the chromatic number when ``status`` is "exact" and None
    otherwise.  ``lower_bound`` is always sound: every search with fewer
    colors was exhausted (or ruled out by a clique).  On "timeout" the bracket
    [lower_bound, ?] is the best information obtained before the clock ran
    out; on "lower-bound-only" every palette up to the requested maximum was
    exhausted.
    """

    value: int | None
    witness: ColorAssignment | None
    status: str
    lower_bound: int


def backend() -> str:
    """Report which kernel the searches run on."""
    return "compiled" if _kernel.COMPILED else "interpreted"


def _graph_of(instance: Graph | PlaneEmbedding) -> Graph:
    return instance.graph if isinstance(instance, PlaneEmbedding) else instance


def _require_no_isolated(g: Graph) -> None:
    for v in g.vertices:
        if g.degree(v) == 0:
            raise IsolatedVertex(
                f"vertex {v} has no neighbors; open-neighborhood rules are undefined"
            )


def search_coloring(
    g: Graph,
    k: int,
    constraints: Iterable[tuple[int, Sequence[int]]] = (),
    *,
    proper: bool = True,
    symmetry_break: bool = False,
    time_budget: float | None = DEFAULT_TIME_BUDGET,
) -> ColorAssignment | None:
    """Search for a coloring of ``g`` with colors 1..k.

    ``constraints`` holds (flavor, members) pairs, flavor one of SET_CF,
    SET_UM, SET_CF_DESIGNATED; for the designated flavor the first member is
    the vertex whose color must be unique in the set.  Returns the
    lexicographically first valid assignment under the fixed vertex order, or
    None after exhausting the space.  Only enable ``symmetry_break`` when
    every constraint is invariant under color permutation (properness and
    plain CF are, unique-maximum is not).

    Raises Timeout when ``time_budget`` seconds pass before either outcome.
    """
    if k < 1:
        raise MalformedInput(f"palette size must be >= 1, got {k}")
    if g.n == 0:
        return ColorAssignment({}, palette_size=k)

    vs = g.vertices
    index = {v: i for i, v in enumerate(vs)}
    off = array("i", [0])
    nbr = array("i")
    for v in vs:
        nbr.extend(index[u] for u in g.neighbors(v))
        off.append(len(nbr))
    if not nbr:
        nbr.append(0)
    order = array("i", [index[v] for v in sorted(vs, key=lambda v: (-g.degree(v), v))])

    rules: list[int] = []
    rows: list[list[int]] = []
    for flavor, members in constraints:
        if flavor not in (SET_CF, SET_UM, SET_CF_DESIGNATED):
            raise MalformedInput(f"unknown constraint-set flavor {flavor!r}")
        try:
            row = [index[v] for v in members]
        except KeyError as e:
            raise MalformedInput(f"constraint set mentions unknown vertex {e.args[0]}")
        if not row:
            continue
        rules.append(flavor)
        rows.append(row)
    soff, smem = _kernel.make_csr(rows)
    member_rows: list[list[int]] = [[] for _ in vs]
    for si, row in enumerate(rows):
        for vi in row:
            member_rows[vi].append(si)
    vsoff, vsmem = _kernel.make_csr(member_rows)
    srule = array("i", rules or [0])

    deadline = 0.0 if time_budget is None else monotonic() + time_budget
    status, colors = _kernel.search(
        k,
        off,
        nbr,
        order,
        1 if proper else 0,
        1 if symmetry_break else 0,
        soff,
        smem,
        srule,
        vsoff,
        vsmem,
        deadline,
    )
    if status == _kernel.DEADLINE:
        raise Timeout(f"no verdict for k={k} within {time_budget} s")
    if status == _kernel.EXHAUSTED:
        return None
    return ColorAssignment({v: colors[index[v]] for v in vs}, palette_size=k)


def _variant_constraints(
    instance: Graph | PlaneEmbedding, variant: VariantSpec
) -> list[tuple[int, list[int]]]:
    g = _graph_of(instance)
    if variant.scope == FACIAL:
        if not isinstance(instance, PlaneEmbedding):
            raise MissingEmbedding("facial variants need a PlaneEmbedding")
        flavor = SET_CF if variant.rule == CONFLICT_FREE else SET_UM
        return [
            (flavor, sorted(f.boundary)) for f in instance.faces if f.boundary
        ]
    flavor = SET_CF if variant.rule == CONFLICT_FREE else SET_UM
    if variant.scope == OPEN:
        _require_no_isolated(g)
        return [(flavor, list(g.neighbors(v))) for v in g.vertices]
    return [(flavor, [v, *g.neighbors(v)]) for v in g.vertices]


def exists_coloring(
    instance: Graph | PlaneEmbedding,
    variant: VariantSpec,
    k: int,
    *,
    time_budget: float | None = DEFAULT_TIME_BUDGET,
) -> ColorAssignment | None:
    """Find a variant-valid coloring with palette {1..k}, or prove none exists.

    Raises IsolatedVertex for open-scope variants on graphs with an isolated
    vertex, MissingEmbedding for facial variants on a bare Graph, and Timeout
    when the budget runs out before either outcome.
    """
    g = _graph_of(instance)
    constraints = _variant_constraints(instance, variant)
    witness = search_coloring(
        g,
        k,
        constraints,
        proper=variant.properness == PROPER,
        symmetry_break=variant.rule == CONFLICT_FREE,
        time_budget=time_budget,
    )
    assert witness is None or check(instance, witness, variant) is None
    return witness


def _clique_lower_bound(g: Graph) -> int:
    if g.m == 0:
        return 1
    return max(len(c) for c in nx.find_cliques(to_networkx(g)))


def chromatic_number(
    instance: Graph | PlaneEmbedding,
    variant: VariantSpec,
    *,
    max_colors: int | None = None,
    time_budget: float | None = DEFAULT_TIME_BUDGET,
) -> SolveResult:
    """Smallest k admitting a variant-valid coloring, by increasing-k search.

    ``time_budget`` applies to each (instance, k) query separately.  The
    search starts at the clique lower bound for proper variants (any proper
    coloring is injective on a clique) and at 1 otherwise.
    """
    g = _graph_of(instance)
    if g.n == 0:
        return SolveResult(0, None, EXACT, 0)
    if variant.scope == OPEN:
        _require_no_isolated(g)
    if max_colors is None:
        max_colors = g.n
    if max_colors < 1:
        raise MalformedInput(f"max_colors must be >= 1, got {max_colors}")
    lb = _clique_lower_bound(g) if variant.properness == PROPER else 1
    for k in range(lb, max_colors + 1):
        try:
            witness = exists_coloring(instance, variant, k, time_budget=time_budget)
        except Timeout:
            return SolveResult(None, None, TIMEOUT, k)
        if witness is not None:
            return SolveResult(k, witness, EXACT, k)
    return SolveResult(None, None, LOWER_BOUND_ONLY, max(lb, max_colors + 1))


def solve(request: SolveRequest) -> SolveResult:
    """Dispatch a SolveRequest to chromatic_number."""
    return chromatic_number(
        request.instance,
        request.variant,
        max_colors=request.max_colors,
        time_budget=request.time_budget,
    )


def facial_chromatic_number(
    embedding: PlaneEmbedding,
    rule: str,
    *,
    time_budget: float | None = DEFAULT_TIME_BUDGET,
) -> SolveResult:
    """Exact facial chromatic number for the CF or UM rule.

    Every plane embedding admits a proper facial-CF coloring with 4 colors
    and a proper facial-UM coloring with 5, so exhausting those palettes
    signals a face-tracing or checker bug and raises BoundViolated.
    """
    if rule not in (CONFLICT_FREE, UNIQUE_MAX):
        raise MalformedInput(f"rule must be {CONFLICT_FREE!r} or {UNIQUE_MAX!r}")
    bound = 4 if rule == CONFLICT_FREE else 5
    variant = VariantSpec(PROPER, rule, FACIAL)
    result = chromatic_number(
        embedding, variant, max_colors=bound, time_budget=time_budget
    )
    if result.status == LOWER_BOUND_ONLY:
        raise BoundViolated(
            f"facial {rule} coloring needs more than {bound} colors; "
            "this contradicts a guaranteed bound for plane embeddings"
        )
    return result


def proper_coloring(
    g: Graph, k: int, *, time_budget: float | None = DEFAULT_TIME_BUDGET
) -> ColorAssignment | None:
    """Plain proper coloring with palette {1..k}, or None (exhaustive)."""
    witness = search_coloring(
        g, k, proper=True, symmetry_break=True, time_budget=time_budget
    )
    assert witness is None or all(witness[u] != witness[v] for u, v in g.edges())
    return witness


def proper_chromatic_number(
    g: Graph,
    *,
    max_colors: int | None = None,
    time_budget: float | None = DEFAULT_TIME_BUDGET,
) -> SolveResult:
    """Ordinary chromatic number, same engine with no CF/UM condition."""
    if g.n == 0:
        return SolveResult(0, None, EXACT, 0)
    if max_colors is None:
        max_colors = g.n
    lb = _clique_lower_bound(g)
    for k in range(lb, max_colors + 1):
        try:
            witness = proper_coloring(g, k, time_budget=time_budget)
        except Timeout:
            return SolveResult(None, None, TIMEOUT, k)
        if witness is not None:
            return SolveResult(k, witness, EXACT, k)
    return SolveResult(None, None, LOWER_BOUND_ONLY, max(lb, max_colors + 1))
