"""Compare the compiled kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Workloads are the two hot loops of the covering engine: local-invariant
codes over every raw incidence assignment (the labeled count behind the
orbit-counting cross-check) and least-conjugate canonicalization.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from branetft import kernels
from branetft.coverings import SearchBounds, brane_setup, symmetric_cached
from branetft.lab import default_catalog


def workloads():
    cat = default_catalog()
    big = SearchBounds(4, 12, 20_000_000)
    for name, d, reduced in (("sphere4", 3, False), ("foam3", 3, False), ("foam3", 4, True)):
        g = symmetric_cached(d)
        setup = brane_setup(cat[name], g, big)
        args, total = setup._kernel_args(reduced=reduced)
        args["identity"] = g.identity
        yield f"local_codes {name} S{d} ({total} tuples)", "local_codes", (g.table, g.inverse), args
    g = symmetric_cached(4)
    rng = np.random.default_rng(0)
    tuples = rng.integers(0, len(g), size=(200_000, 3))
    yield "conj_canon S4 200000x3", "conj_canon", (g.table, g.inverse), dict(
        tuples=tuples, var_comp=[0, 0, 0], ncomp=1)


def run(repeat: int):
    backends = kernels.backends()
    print(f"backends: {', '.join(backends)}")
    for label, fn, (table, inverse), kw in workloads():
        times, results = {}, {}
        for name, mod in backends.items():
            best = float("inf")
            for _ in range(repeat):
                t0 = time.perf_counter()
                res = getattr(mod, fn)(table, inverse, **kw)
                best = min(best, time.perf_counter() - t0)
            times[name], results[name] = best, res
        ref = results["python"]
        same = all(
            all(np.array_equal(a, b) for a, b in zip(r, ref)) if isinstance(r, tuple) else np.array_equal(r, ref)
            for r in results.values())
        cells = "  ".join(f"{n}={t * 1000:9.1f} ms" for n, t in times.items())
        speed = f"  speedup={times['python'] / times['cython']:.1f}x" if "cython" in times else ""
        print(f"{label:48s} {cells}{speed}  agree={same}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    run(ap.parse_args().repeat)
