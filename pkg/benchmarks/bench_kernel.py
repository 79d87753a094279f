#!/usr/bin/env python3
"""Compare the compiled and pure canonical-labeling kernels.

Two workloads: raw canonical-form calls on random graphs of each size, and
one real catalog generation (the hot path that motivated the compiled
kernel).  Run after building the extension in place:

    python setup.py build_ext --inplace
    python benchmarks/bench_kernel.py
"""

import random
import subprocess
import sys
import time

from etskit import _kernel

try:
    from etskit import _ckernel
except ImportError:
    _ckernel = None


def random_graphs(n, count, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        adj = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < rng.choice((0.15, 0.35, 0.55, 0.8)):
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        out.append(adj)
    return out


def bench_canon():
    print(f"{'n':>3} {'pure us/call':>14} {'compiled us/call':>17} {'speedup':>8}")
    for n in (6, 8, 9, 10):
        graphs = random_graphs(n, 400, seed=n)
        t0 = time.perf_counter()
        for adj in graphs:
            _kernel.canonical_bits(n, adj)
        pure = (time.perf_counter() - t0) / len(graphs) * 1e6
        if _ckernel is None:
            print(f"{n:>3} {pure:>14.1f} {'-':>17} {'-':>8}")
            continue
        t0 = time.perf_counter()
        for adj in graphs:
            _ckernel.canonical_bits(n, adj)
        comp = (time.perf_counter() - t0) / len(graphs) * 1e6
        for adj in graphs:
            assert _kernel.canonical_bits(n, adj) == _ckernel.canonical_bits(n, adj)
        print(f"{n:>3} {pure:>14.1f} {comp:>17.1f} {pure / comp:>7.1f}x")


def bench_generation():
    """Time one catalog generation per kernel in a fresh interpreter."""
    snippet = (
        "import time; t0=time.time(); "
        "from etskit.structgen import ClassSpec, generate_structures; "
        "cat = generate_structures(ClassSpec(5, 6, 8, 6)); "
        "print(f'{len(cat)} structures {time.time()-t0:.2f}s')"
    )
    for label, env in (("compiled", None), ("pure", {"ETSKIT_PURE": "1"})):
        import os

        full_env = dict(os.environ)
        if env:
            full_env.update(env)
        if label == "compiled" and _ckernel is None:
            print("generation (compiled): extension not built, skipping")
            continue
        out = subprocess.run(
            [sys.executable, "-c", snippet],
            capture_output=True,
            text=True,
            env=full_env,
        )
        print(f"generation of (d_l=5, g=6, a=8, b=6) [{label}]: {out.stdout.strip()}")


if __name__ == "__main__":
    print(f"active kernels: pure{' + compiled' if _ckernel else ' only'}")
    bench_canon()
    bench_generation()
