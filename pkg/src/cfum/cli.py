"""Command-line interface.

Exit codes follow one convention across subcommands: 0 success (all checks
pass), 1 a claim or coloring was contradicted, 2 malformed input or usage,
3 a time budget expired before the question was settled.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import construct, exact, gadgets, repro
from .errors import CfumError, Timeout
from .graphs import (
    Graph,
    PlaneEmbedding,
    parse_coloring,
    parse_embedding,
    parse_graph,
    serialize_coloring,
    serialize_embedding,
    serialize_graph,
    to_dot,
    trace_faces,
)
from .randgen import random_outerplanar, random_planar
from .variants import VariantSpec, check

_ALGORITHMS = {
    # name: (builder, wants embedding, target variant code, color bound)
    "iumc6": (construct.color_iumc, True, "iUMc", 6),
    "pcfo8": (construct.color_pcfo, True, "pCFo", 8),
    "pumo10": (construct.color_pumo, True, "pUMo", 10),
    "pumc8": (construct.color_pumc, True, "pUMc", 8),
    "outerplanar-pumo5": (construct.color_pumo_outerplanar, False, "pUMo", 5),
    "facial-cf": (construct.facial_cf_coloring, True, "pCFf", 4),
    "facial-um": (construct.facial_um_coloring, True, "pUMf", 5),
    "greedy": (construct.greedy_first_fit, False, None, None),
}


def _add_variant_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--proper", dest="proper", action="store_true", default=True,
                   help="adjacent vertices get distinct colors (default)")
    g.add_argument("--improper", dest="proper", action="store_false")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--cf", dest="rule", action="store_const", const="CF",
                   default="CF", help="some color appears exactly once (default)")
    g.add_argument("--um", dest="rule", action="store_const", const="UM",
                   help="the maximum color appears exactly once")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--open", dest="scope", action="store_const", const="o",
                   default="o", help="open neighborhoods (default)")
    g.add_argument("--closed", dest="scope", action="store_const", const="c")
    g.add_argument("--facial", dest="scope", action="store_const", const="f",
                   help="face boundaries of a plane embedding")


def _variant_of(args: argparse.Namespace) -> VariantSpec:
    return VariantSpec.from_code(("p" if args.proper else "i") + args.rule + args.scope)


def _sniff(text: str) -> str:
    """Edge-list headers carry two counts, rotation headers carry one."""
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            return "graph" if len(line.split()) >= 2 else "embedding"
    raise CfumError("input file contains no data lines")


def _load_instance(path: str) -> Graph | PlaneEmbedding:
    text = Path(path).read_text()
    if _sniff(text) == "embedding":
        return parse_embedding(text)
    return parse_graph(text)


def _as_graph(instance: Graph | PlaneEmbedding) -> Graph:
    return instance.graph if isinstance(instance, PlaneEmbedding) else instance


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _cmd_check(args) -> int:
    variant = _variant_of(args)
    instance = _load_instance(args.instance)
    colors = parse_coloring(Path(args.coloring).read_text())
    bad = check(instance, colors, variant)
    if bad is None:
        used = len(set(c for _, c in colors.items()))
        print(f"valid {variant} coloring with {used} colors")
        return 0
    print(f"invalid {variant} coloring: {bad.reason} at {bad.vertex_or_face}")
    return 1


def _cmd_chromatic(args) -> int:
    variant = _variant_of(args)
    instance = _load_instance(args.instance)
    result = exact.solve(exact.SolveRequest(
        instance=instance,
        variant=variant,
        max_colors=args.max_colors,
        time_budget=args.time_budget,
    ))
    if result.status == exact.EXACT:
        print(f"chromatic number ({variant}) = {result.value}")
        if result.witness is not None and args.witness_out:
            _emit(serialize_coloring(result.witness), args.witness_out)
        return 0
    if result.status == exact.LOWER_BOUND_ONLY:
        print(f"chromatic number ({variant}) > {args.max_colors} "
              f"(lower bound {result.lower_bound})")
        return 0
    print(f"time budget expired; chromatic number ({variant}) >= {result.lower_bound}")
    return 3


def _cmd_construct(args) -> int:
    builder, wants_embedding, code, bound = _ALGORITHMS[args.algorithm]
    instance = _load_instance(args.instance)
    if wants_embedding:
        if not isinstance(instance, PlaneEmbedding):
            print(f"{args.algorithm} needs a rotation-system file", file=sys.stderr)
            return 2
        colors = builder(instance, time_budget=args.time_budget)
    else:
        colors = builder(_as_graph(instance))
    used = max(c for _, c in colors.items())
    if code is None:
        report = f"proper first-fit coloring with max color {used}"
    else:
        variant = VariantSpec.from_code(code)
        bad = check(instance if code.endswith("f") else _as_graph(instance),
                    colors, variant)
        verdict = "valid" if bad is None else f"INVALID ({bad.reason})"
        report = f"{verdict} {code} coloring, max color {used} (bound {bound})"
        if bad is not None:
            print(report, file=sys.stderr)
            return 1
    print(report, file=sys.stderr)
    _emit(serialize_coloring(colors), args.output)
    return 0


def _cmd_closure(args) -> int:
    from .closure import facial_closure

    embedding = _load_instance(args.instance)
    if not isinstance(embedding, PlaneEmbedding):
        print("closure needs a rotation-system file", file=sys.stderr)
        return 2
    deleted = _parse_vertex_list(args.delete)
    result = facial_closure(embedding, deleted)
    out = [serialize_graph(result.closure_graph).rstrip("\n")]
    added = " ".join(f"{u}-{v}" for u, v in sorted(result.added_edges))
    out.append("# added edges: " + (added or "(none)"))
    for x, members in sorted(result.constraint_sets.items()):
        out.append(f"# constraint set of {x}: " + " ".join(map(str, members)))
    if result.derived_embedding is not None:
        out.append("# closure rotation system:")
        out += ["# " + line for line in
                serialize_embedding(result.derived_embedding).splitlines()]
    else:
        out.append(f"# no plane embedding derived: {result.diagnostic}")
    _emit("\n".join(out) + "\n", args.output)
    return 0


def _cmd_gadget(args) -> int:
    if args.list:
        for name in gadgets.gadget_names():
            print(name)
        return 0
    if args.name is None:
        print("gadget name required (or --list)", file=sys.stderr)
        return 2
    spec = gadgets.gadget_spec(args.name)
    if args.format == "dot":
        _emit(to_dot(spec.graph), args.output)
        return 0
    out = [serialize_graph(spec.graph).rstrip("\n")]
    out.append(f"# {spec.source}")
    for variant, value in spec.claimed:
        out.append(f"# claimed: chi_{variant} = {value}")
    for v in sorted(spec.labels):
        out.append(f"# label {v}: {spec.labels[v]}")
    _emit("\n".join(out) + "\n", args.output)
    return 0


def _cmd_faces(args) -> int:
    embedding = _load_instance(args.instance)
    if not isinstance(embedding, PlaneEmbedding):
        print("faces needs a rotation-system file", file=sys.stderr)
        return 2
    for face in trace_faces(embedding):
        walk = " ".join(map(str, face.walk)) if face.walk else "(edgeless)"
        print(walk)
    return 0


def _cmd_random(args) -> int:
    if args.kind == "planar":
        embedding = random_planar(args.n, args.seed, thin=args.thin)
        _emit(serialize_embedding(embedding), args.output)
    else:
        g = random_outerplanar(args.n, args.seed, thin=args.thin)
        _emit(serialize_graph(g), args.output)
    return 0


def _cmd_reproduce(args) -> int:
    report = repro.reproduce(args.tier, quick_budget=args.time_budget)
    sys.stdout.write(report.csv() if args.format == "csv" else report.text())
    if report.has_contradiction:
        return 1
    if report.has_timeout:
        return 3
    return 0


def _parse_vertex_list(text: str) -> frozenset[int]:
    try:
        return frozenset(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise CfumError(f"bad vertex list {text!r}") from None


_SHARED_FALLBACKS = {"seed": 0, "time_budget": 60.0, "format": "text"}


def _build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subparser from clobbering a value parsed before the
    # subcommand, so the shared flags are accepted in either position; the
    # fallbacks are filled in after parsing (set_defaults would write through
    # to the action objects shared with the subparsers and undo root values)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="RNG seed (default 0)")
    common.add_argument("--time-budget", type=float, default=argparse.SUPPRESS,
                        help="seconds per exact search (default 60)")
    common.add_argument("--format", choices=("text", "csv", "dot"),
                        default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="cfum",
        description="conflict-free and unique-maximum neighborhood colorings",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("check", help="validate a coloring file against a variant")
    p.add_argument("instance")
    p.add_argument("coloring")
    _add_variant_flags(p)
    p.set_defaults(run=_cmd_check)

    p = add_parser("chromatic", help="exact chromatic number of a variant")
    p.add_argument("instance")
    p.add_argument("--max-colors", type=int, default=None)
    p.add_argument("--witness-out", default=None,
                   help="write an optimal coloring here")
    _add_variant_flags(p)
    p.set_defaults(run=_cmd_chromatic)

    p = add_parser("construct", help="run a constructive coloring pipeline")
    p.add_argument("instance")
    p.add_argument("--algorithm", choices=sorted(_ALGORITHMS), required=True)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(run=_cmd_construct)

    p = add_parser("closure", help="facial closure after deleting vertices")
    p.add_argument("instance")
    p.add_argument("--delete", required=True, help="comma-separated vertex ids")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(run=_cmd_closure)

    p = add_parser("gadget", help="emit a named lower-bound graph")
    p.add_argument("name", nargs="?", default=None)
    p.add_argument("--list", action="store_true", help="list gadget names")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(run=_cmd_gadget)

    p = add_parser("faces", help="list the face walks of an embedding")
    p.add_argument("instance")
    p.set_defaults(run=_cmd_faces)

    p = add_parser("random", help="generate a seeded random instance")
    p.add_argument("kind", choices=("planar", "outerplanar"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--thin", type=float, default=0.0,
                   help="edge-deletion probability, connectivity preserved")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(run=_cmd_random)

    p = add_parser("reproduce", help="recompute every claimed value and bound")
    p.add_argument("--tier", choices=("quick", "full"), default="quick")
    p.set_defaults(run=_cmd_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    for dest, value in _SHARED_FALLBACKS.items():
        if not hasattr(args, dest):
            setattr(args, dest, value)
    try:
        return args.run(args)
    except Timeout as e:
        print(f"time budget expired: {e}", file=sys.stderr)
        return 3
    except (CfumError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
