"""Compare the compiled search kernel against the interpreted fallback.

The kernel source is pure-mode Cython, so the same file runs either way;
this script loads a second, interpreted copy of cfum/_kernel.py next to the
compiled import and times identical exhaustive searches through both.

Run:  python3 benchmarks/bench_solver.py
"""

from __future__ import annotations

import importlib.util
import time
from contextlib import contextmanager
from pathlib import Path

import cfum.exact as exact
from cfum import gadgets, random_planar
from cfum.variants import VariantSpec

REPEATS = 3


def load_interpreted_kernel():
    path = Path(exact.__file__).with_name("_kernel.py")
    spec = importlib.util.spec_from_file_location("cfum._kernel_interpreted", path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    assert not module.COMPILED
    return module


@contextmanager
def kernel(module):
    saved = exact._kernel
    exact._kernel = module
    try:
        yield
    finally:
        exact._kernel = saved


def workloads():
    for name in ("fritsch", "G3prime", "H_iUMo", "H_pCFo"):
        spec = gadgets.gadget_spec(name)
        (variant, value), = spec.claimed
        # the k-1 exhaustion is the expensive half of the value computation
        yield (
            f"{name} {variant} k={value - 1} exhaustion",
            lambda g=spec.graph, v=variant, k=value - 1: exact.exists_coloring(
                g, v, k, time_budget=600
            ),
        )
    embedding = random_planar(16, seed=4, thin=0.2)
    yield (
        "random planar n=16 pUMo chromatic number",
        lambda: exact.chromatic_number(
            embedding.graph, VariantSpec.from_code("pUMo"), time_budget=600
        ),
    )


def best_of(fn) -> float:
    times = []
    for _ in range(REPEATS):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main() -> None:
    interpreted = load_interpreted_kernel()
    print(f"compiled backend available: {exact.backend()}")
    rows = []
    for name, fn in workloads():
        with kernel(interpreted):
            slow = best_of(fn)
        fast = best_of(fn)
        rows.append((name, fast, slow, slow / fast if fast > 0 else float("inf")))
    width = max(len(r[0]) for r in rows)
    print(f"{'workload'.ljust(width)}  compiled  interpreted  speedup")
    for name, fast, slow, ratio in rows:
        print(f"{name.ljust(width)}  {fast:7.3f}s  {slow:10.3f}s  {ratio:6.1f}x")


if __name__ == "__main__":
    main()
