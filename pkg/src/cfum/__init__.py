"""Conflict-free and unique-maximum neighborhood colorings of planar graphs."""

from .closure import ClosureResult, facial_closure
from .construct import (
    Partition,
    color_iumc,
    color_pcfo,
    color_pumc,
    color_pumo,
    color_pumo_outerplanar,
    dominating_four_coloring,
    facial_cf_coloring,
    facial_um_coloring,
    greedy_first_fit,
    greedy_partition,
)
from .exact import (
    SolveRequest,
    SolveResult,
    backend,
    chromatic_number,
    exists_coloring,
    facial_chromatic_number,
    proper_chromatic_number,
    search_coloring,
    solve,
)
from .gadgets import GadgetSpec, claimed_values, gadget_names, gadget_spec, generate
from .graphs import (
    ColorAssignment,
    Face,
    Graph,
    PlaneEmbedding,
    delete_vertices,
    embed_planar,
    is_outerplanar,
    parse_coloring,
    parse_embedding,
    parse_graph,
    serialize_coloring,
    serialize_embedding,
    serialize_graph,
    subdivide,
    to_dot,
    trace_faces,
)
from .randgen import random_outerplanar, random_planar
from .repro import ReproReport, ReproRow, reproduce
from .variants import (
    ALL_NEIGHBORHOOD_VARIANTS,
    CONFLICT_FREE,
    UNIQUE_MAX,
    VariantSpec,
    Violation,
    check,
)

__all__ = [
    "ALL_NEIGHBORHOOD_VARIANTS",
    "CONFLICT_FREE",
    "ClosureResult",
    "ColorAssignment",
    "Face",
    "GadgetSpec",
    "Graph",
    "Partition",
    "PlaneEmbedding",
    "ReproReport",
    "ReproRow",
    "SolveRequest",
    "SolveResult",
    "UNIQUE_MAX",
    "VariantSpec",
    "Violation",
    "backend",
    "check",
    "chromatic_number",
    "claimed_values",
    "color_iumc",
    "color_pcfo",
    "color_pumc",
    "color_pumo",
    "color_pumo_outerplanar",
    "delete_vertices",
    "dominating_four_coloring",
    "embed_planar",
    "exists_coloring",
    "facial_cf_coloring",
    "facial_chromatic_number",
    "facial_closure",
    "facial_um_coloring",
    "gadget_names",
    "gadget_spec",
    "generate",
    "greedy_first_fit",
    "greedy_partition",
    "is_outerplanar",
    "parse_coloring",
    "parse_embedding",
    "parse_graph",
    "proper_chromatic_number",
    "random_outerplanar",
    "random_planar",
    "reproduce",
    "search_coloring",
    "serialize_coloring",
    "serialize_embedding",
    "serialize_graph",
    "solve",
    "subdivide",
    "to_dot",
    "trace_faces",
]
