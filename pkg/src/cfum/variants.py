"""Validity checkers for the neighborhood coloring variants.

A variant is a point in {proper, improper} x {conflict-free, unique-maximum}
x {open-neighborhood, closed-neighborhood, facial}.  The checker here is the
semantic ground truth that the search engine, the constructive pipelines, and
the gadget claims are all tested against, so it is written as plainly as
possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Mapping

from .errors import IsolatedVertex, MalformedInput, MissingEmbedding
from .graphs import ColorAssignment, Graph, PlaneEmbedding

PROPER = "proper"
IMPROPER = "improper"
CONFLICT_FREE = "conflict-free"
UNIQUE_MAX = "unique-maximum"
OPEN = "open-neighborhood"
CLOSED = "closed-neighborhood"
FACIAL = "facial"

NOT_PROPER = "not-proper"
NO_UNIQUE_COLOR = "no-unique-color"
MAX_NOT_UNIQUE = "max-not-unique"
ISOLATED_VERTEX = "isolated-vertex"


@dataclass(frozen=True)
class VariantSpec:
    """One coloring variant, e.g. VariantSpec.from_code("pCFo")."""

    properness: str
    rule: str
    scope: str

    _SCOPES: ClassVar[dict[str, str]] = {"o": OPEN, "c": CLOSED, "f": FACIAL}

    def __post_init__(self):
        if self.properness not in (PROPER, IMPROPER):
            raise MalformedInput(f"unknown properness {self.properness!r}")
        if self.rule not in (CONFLICT_FREE, UNIQUE_MAX):
            raise MalformedInput(f"unknown rule {self.rule!r}")
        if self.scope not in (OPEN, CLOSED, FACIAL):
            raise MalformedInput(f"unknown scope {self.scope!r}")

    @classmethod
    def from_code(cls, code: str) -> "VariantSpec":
        """Parse short names like iCFo, pUMc, or pCFf (f = facial)."""
        if len(code) == 4 and code[0] in "pi" and code[3] in cls._SCOPES:
            mid = code[1:3]
            if mid in ("CF", "UM"):
                return cls(
                    PROPER if code[0] == "p" else IMPROPER,
                    CONFLICT_FREE if mid == "CF" else UNIQUE_MAX,
                    cls._SCOPES[code[3]],
                )
        raise MalformedInput(f"unknown variant code {code!r}")

    @property
    def code(self) -> str:
        return (
            ("p" if self.properness == PROPER else "i")
            + ("CF" if self.rule == CONFLICT_FREE else "UM")
            + {OPEN: "o", CLOSED: "c", FACIAL: "f"}[self.scope]
        )

    def __str__(self) -> str:
        return self.code


ALL_NEIGHBORHOOD_VARIANTS = tuple(
    VariantSpec.from_code(p + r + s) for p in "ip" for r in ("CF", "UM") for s in "oc"
)


@dataclass(frozen=True)
class Violation:
    """Why a coloring fails: at which vertex (or face walk) and for what reason."""

    vertex_or_face: int | tuple[int, ...]
    reason: str


def _as_assignment(colors) -> ColorAssignment:
    if isinstance(colors, ColorAssignment):
        return colors
    if isinstance(colors, Mapping):
        return ColorAssignment(colors)
    raise MalformedInput(f"expected a coloring, got {type(colors).__name__}")


def _rule_violation(counts: dict[int, int], rule: str) -> str | None:
    if rule == CONFLICT_FREE:
        if 1 in counts.values():
            return None
        return NO_UNIQUE_COLOR
    mx = max(counts)
    return None if counts[mx] == 1 else MAX_NOT_UNIQUE


def check(instance: Graph | PlaneEmbedding, colors, variant: VariantSpec) -> Violation | None:
    """Validate a coloring; None when valid, else the first violation.

    Vertices are scanned in increasing id order, properness before the CF/UM
    condition at each vertex, so the reported violation is deterministic.
    Facial violations carry the face's boundary walk and are reported after
    any vertex-level properness violation, in face-trace order.
    """
    colors = _as_assignment(colors)
    if variant.scope == FACIAL:
        if not isinstance(instance, PlaneEmbedding):
            raise MissingEmbedding("facial checking needs a plane embedding")
        embedding, g = instance, instance.graph
    else:
        embedding = None
        g = instance.graph if isinstance(instance, PlaneEmbedding) else instance

    for v in g.vertices:
        if v not in colors:
            raise MalformedInput(f"vertex {v} is uncolored")
    if variant.scope == OPEN:
        for v in g.vertices:
            if g.degree(v) == 0:
                raise IsolatedVertex(
                    f"vertex {v} is isolated; open-neighborhood colorings are undefined")

    proper = variant.properness == PROPER
    for v in g.vertices:
        if proper and any(colors[u] == colors[v] for u in g.neighbors(v)):
            return Violation(v, NOT_PROPER)
        if variant.scope == FACIAL:
            continue
        hood = g.neighbors(v) if variant.scope == OPEN else g.neighbors(v) + (v,)
        counts: dict[int, int] = {}
        for u in hood:
            counts[colors[u]] = counts.get(colors[u], 0) + 1
        reason = _rule_violation(counts, variant.rule)
        if reason is not None:
            return Violation(v, reason)

    if variant.scope == FACIAL:
        for face in embedding.faces:
            if not face.boundary:
                continue
            counts = {}
            for u in face.boundary:
                counts[colors[u]] = counts.get(colors[u], 0) + 1
            reason = _rule_violation(counts, variant.rule)
            if reason is not None:
                return Violation(face.walk, reason)
    return None


def unique_max(g: Graph, colors, v: int, scope: str = OPEN) -> int | None:
    """The maximum color on N(v) (open) or N[v] (closed) if it occurs exactly
    once there, otherwise None."""
    colors = _as_assignment(colors)
    if scope in ("open", OPEN):
        hood = g.neighbors(v)
    elif scope in ("closed", CLOSED):
        hood = g.neighbors(v) + (v,)
    else:
        raise MalformedInput(f"unknown scope {scope!r}")
    if not hood:
        raise IsolatedVertex(f"vertex {v} has an empty open neighborhood")
    values = [colors[u] for u in hood]
    mx = max(values)
    return mx if values.count(mx) == 1 else None
