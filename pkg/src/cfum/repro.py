"""One-shot reproduction harness for every claimed value and bound.

``reproduce("quick")`` re-derives each gadget's chromatic value with the
exact solver, spot-checks the constructive pipelines against their bounds on
seeded corpora, and cross-checks the solver identities (closed-CF equals the
plain chromatic number, the monotonicity sandwich, the subdivision bound).
The two expensive lower-bound exhaustions are deferred to the "full" tier,
whose extended time budget can be overridden via the CFUM_ACCEPT_BUDGET
environment variable.  Timeouts are reported as such; only a completed
computation that disagrees with a claim marks a row failed.
"""

from __future__ import annotations

import csv
import io
import os
import time
from dataclasses import dataclass

from . import construct, exact, gadgets, instances
from .errors import CfumError, Timeout
from .graphs import Graph, PlaneEmbedding, subdivide
from .randgen import random_outerplanar, random_planar
from .variants import CONFLICT_FREE, UNIQUE_MAX, VariantSpec, check

PASS = "pass"
FAIL = "fail"
TIMEOUT = "timeout"

LONG_BUDGET_ENV = "CFUM_ACCEPT_BUDGET"
DEFAULT_LONG_BUDGET = 1800.0

# gadget checks cheap enough for the quick tier, in report order
_QUICK_GADGETS = (
    "fritsch",
    "G3",
    "G3prime",
    "O_iUMo",
    "H_iUMo",
    "O_pUMc",
    "C_n(5)",
    "C_n(6)",
    "C_n(7)",
)
# their lower-bound exhaustions are the flagged long-running computations
_LONG_GADGETS = ("H_pCFo", "H_pUMo")


@dataclass(frozen=True)
class ReproRow:
    claim: str
    variant: str
    instance: str
    expected: str
    computed: str
    status: str
    seconds: float


@dataclass(frozen=True)
class ReproReport:
    tier: str
    rows: tuple[ReproRow, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.status == PASS for r in self.rows)

    @property
    def has_contradiction(self) -> bool:
        return any(r.status == FAIL for r in self.rows)

    @property
    def has_timeout(self) -> bool:
        return any(r.status == TIMEOUT for r in self.rows)

    def text(self) -> str:
        header = ("claim", "variant", "instance", "expected", "computed", "status", "s")
        table = [header] + [
            (r.claim, r.variant, r.instance, r.expected, r.computed, r.status,
             f"{r.seconds:.2f}")
            for r in self.rows
        ]
        widths = [max(len(row[i]) for row in table) for i in range(len(header))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
                 for row in table]
        lines.insert(1, "  ".join("-" * w for w in widths))
        counts = (
            f"{sum(r.status == PASS for r in self.rows)} pass, "
            f"{sum(r.status == FAIL for r in self.rows)} fail, "
            f"{sum(r.status == TIMEOUT for r in self.rows)} timeout"
        )
        return "\n".join(lines + [f"tier={self.tier}: {counts}"]) + "\n"

    def csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["claim", "variant", "instance", "expected", "computed",
                    "status", "seconds"])
        for r in self.rows:
            w.writerow([r.claim, r.variant, r.instance, r.expected, r.computed,
                        r.status, f"{r.seconds:.3f}"])
        return buf.getvalue()


def _timed(fn):
    t = time.perf_counter()
    try:
        return fn(), None, time.perf_counter() - t
    except Timeout as e:
        return None, e, time.perf_counter() - t


def _gadget_value_row(name: str, budget: float) -> ReproRow:
    spec = gadgets.gadget_spec(name)
    (variant, value), = spec.claimed
    t = time.perf_counter()
    try:
        hi = exact.exists_coloring(spec.graph, variant, value, time_budget=budget)
        lo = (
            exact.exists_coloring(spec.graph, variant, value - 1, time_budget=budget)
            if value > 1
            else None
        )
    except Timeout:
        return ReproRow(
            f"gadget:{name}", variant.code, name, f"={value}",
            "search timed out; claim not contradicted", TIMEOUT,
            time.perf_counter() - t,
        )
    dt = time.perf_counter() - t
    if hi is not None and lo is None:
        return ReproRow(f"gadget:{name}", variant.code, name, f"={value}",
                        f"={value}", PASS, dt)
    computed = (
        f"no {value}-coloring found" if hi is None else f"{value - 1}-coloring exists"
    )
    return ReproRow(f"gadget:{name}", variant.code, name, f"={value}", computed,
                    FAIL, dt)


def _gadget_upper_row(name: str, budget: float) -> ReproRow:
    spec = gadgets.gadget_spec(name)
    (variant, value), = spec.claimed
    t = time.perf_counter()
    try:
        hi = exact.exists_coloring(spec.graph, variant, value, time_budget=budget)
    except Timeout:
        return ReproRow(f"gadget:{name}:upper", variant.code, name, f"<={value}",
                        "witness search timed out", TIMEOUT, time.perf_counter() - t)
    dt = time.perf_counter() - t
    if hi is not None:
        return ReproRow(f"gadget:{name}:upper", variant.code, name, f"<={value}",
                        f"witness with {value}", PASS, dt)
    return ReproRow(f"gadget:{name}:upper", variant.code, name, f"<={value}",
                    f"no {value}-coloring", FAIL, dt)


def _small_corpus() -> list[tuple[str, Graph]]:
    out: list[tuple[str, Graph]] = [(f"C{n}", instances.cycle(n)) for n in (3, 4, 5, 6, 7)]
    out += [(f"K{n}", instances.complete(n)) for n in (2, 3, 4)]
    out += [("star4", instances.star(4)), ("wheel5", instances.wheel(5)),
            ("glued-squares", instances.glued_squares())]
    out += [(f"rp8s{s}", random_planar(8, s, thin=0.3).graph) for s in (1, 2, 3)]
    return out


def _corpus_row(claim, variant_label, instance_label, expected, budget, predicate,
                items) -> ReproRow:
    """Evaluate predicate(item) over items; any False fails, Timeout reports."""
    t = time.perf_counter()
    try:
        for label, item in items:
            if not predicate(item):
                return ReproRow(claim, variant_label, instance_label, expected,
                                f"violated on {label}", FAIL,
                                time.perf_counter() - t)
    except Timeout:
        return ReproRow(claim, variant_label, instance_label, expected,
                        "timed out; not contradicted", TIMEOUT,
                        time.perf_counter() - t)
    except CfumError as e:
        return ReproRow(claim, variant_label, instance_label, expected,
                        f"error: {e}", FAIL, time.perf_counter() - t)
    return ReproRow(claim, variant_label, instance_label, expected, "holds", PASS,
                    time.perf_counter() - t)


def _pcfc_equals_chi(g: Graph) -> bool:
    a = exact.chromatic_number(g, VariantSpec.from_code("pCFc"))
    b = exact.proper_chromatic_number(g)
    return a.status == "exact" and b.status == "exact" and a.value == b.value


def _sandwich(g: Graph) -> bool:
    vals = {
        code: exact.chromatic_number(g, VariantSpec.from_code(code)).value
        for code in ("pCFc", "pCFo", "pUMo", "pUMc")
    }
    return (
        vals["pCFc"] <= vals["pCFo"] <= vals["pUMo"]
        and vals["pCFc"] <= vals["pUMc"] <= vals["pUMo"]
    )


def _subdivision_holds(g: Graph) -> bool:
    chi = exact.proper_chromatic_number(g).value
    if chi <= 1:
        return True
    icfo = VariantSpec.from_code("iCFo")
    return exact.exists_coloring(subdivide(g), icfo, chi - 1) is None


def _pipeline_rows(budget: float) -> list[ReproRow]:
    plane: list[tuple[str, PlaneEmbedding]] = [
        ("octahedron", instances.octahedron()),
        ("icosahedron", instances.icosahedron()),
        ("rp10s1", random_planar(10, 1)),
        ("rp12s2", random_planar(12, 2, thin=0.25)),
    ]
    pipelines = [
        ("planar:iumc<=6", "iUMc", construct.color_iumc, 6),
        ("planar:pcfo<=8", "pCFo", construct.color_pcfo, 8),
        ("planar:pumo<=10", "pUMo", construct.color_pumo, 10),
        ("planar:pumc<=8", "pUMc", construct.color_pumc, 8),
    ]
    rows = []
    for claim, code, fn, bound in pipelines:
        variant = VariantSpec.from_code(code)

        def good(e, fn=fn, variant=variant, bound=bound):
            w = fn(e, time_budget=budget)
            return (
                check(e.graph, w, variant) is None
                and max(c for _, c in w.items()) <= bound
            )

        rows.append(
            _corpus_row(claim, code, "plane corpus", f"valid, <={bound} colors",
                        budget, good, plane)
        )
    outer = [("C5", instances.cycle(5)), ("fan5", instances.fan(5))]
    outer += [(f"ro15s{s}", random_outerplanar(15, s, thin=0.2)) for s in (1, 2, 3)]

    def outer_good(g):
        w = construct.color_pumo_outerplanar(g)
        return (
            check(g, w, VariantSpec.from_code("pUMo")) is None
            and max(c for _, c in w.items()) <= 5
        )

    rows.append(
        _corpus_row("outerplanar:pumo<=5", "pUMo", "outerplanar corpus",
                    "valid, <=5 colors", budget, outer_good, outer)
    )
    return rows


def _facial_rows(budget: float) -> list[ReproRow]:
    embeddings = [(f"rp10s{s}", random_planar(10, s, thin=0.3)) for s in (1, 2)]

    def cf_ok(e):
        return exact.facial_chromatic_number(e, CONFLICT_FREE,
                                             time_budget=budget).value <= 4

    def um_ok(e):
        return exact.facial_chromatic_number(e, UNIQUE_MAX,
                                             time_budget=budget).value <= 5

    return [
        _corpus_row("facial:CF<=4", "pCFf", "plane corpus", "value <= 4", budget,
                    cf_ok, embeddings),
        _corpus_row("facial:UM<=5", "pUMf", "plane corpus", "value <= 5", budget,
                    um_ok, embeddings),
    ]


def _glued_squares_row(budget: float) -> ReproRow:
    g = instances.glued_squares()
    t = time.perf_counter()
    chi = exact.proper_chromatic_number(g).value
    icfo = VariantSpec.from_code("iCFo")
    sub = subdivide(g)
    val = exact.chromatic_number(sub, icfo, time_budget=budget)
    dt = time.perf_counter() - t
    ok = chi == 2 and val.status == "exact" and val.value == 3
    return ReproRow(
        "instance:glued-squares:subdivision-strict", "iCFo", "glued-squares",
        "chi=2, subdivided iCFo=3",
        f"chi={chi}, subdivided iCFo={val.value}", PASS if ok else FAIL, dt,
    )


def reproduce(
    tier: str = "quick",
    *,
    quick_budget: float = 60.0,
    long_budget: float | None = None,
) -> ReproReport:
    """Recompute every claim; "full" adds the two long lower-bound exhaustions."""
    if tier not in ("quick", "full"):
        raise ValueError(f"tier must be 'quick' or 'full', got {tier!r}")
    if long_budget is None:
        long_budget = float(os.environ.get(LONG_BUDGET_ENV, DEFAULT_LONG_BUDGET))

    rows: list[ReproRow] = []
    for name in _QUICK_GADGETS:
        rows.append(_gadget_value_row(name, quick_budget))
    for name in _LONG_GADGETS:
        if tier == "full":
            rows.append(_gadget_value_row(name, long_budget))
        else:
            rows.append(_gadget_upper_row(name, quick_budget))

    corpus = _small_corpus()
    rows.append(
        _corpus_row("corpus:pCFc=chi", "pCFc", "small corpus",
                    "equals chromatic number", quick_budget, _pcfc_equals_chi,
                    corpus)
    )
    rows.append(
        _corpus_row("corpus:sandwich", "pCFc/pCFo/pUMo/pUMc", "small corpus",
                    "pCFc <= pCFo <= pUMo and pCFc <= pUMc <= pUMo", quick_budget,
                    _sandwich, corpus)
    )
    rows.append(
        _corpus_row("corpus:subdivision", "iCFo", "small corpus",
                    "subdivided iCFo >= chi", quick_budget, _subdivision_holds,
                    corpus)
    )
    rows.append(_glued_squares_row(quick_budget))
    rows.extend(_pipeline_rows(quick_budget))
    rows.extend(_facial_rows(quick_budget))
    return ReproReport(tier=tier, rows=tuple(rows))
