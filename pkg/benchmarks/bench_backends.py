#!/usr/bin/env python3
"""Time the compiled kernel against the numpy fallback.

Usage:
    python benchmarks/bench_backends.py [--repeats 5]

Covers the three hot kernels (pairwise reductions, Hausdorff, bottleneck
matching) on campaign-sized inputs, plus one end-to-end certification
campaign per backend via the CHEBSTAB_BACKEND override in a subprocess.
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np


def _load_backends():
    from chebstab._kernels import _pure

    try:
        from chebstab._kernels import _native
    except ImportError:
        _native = None
    return _native, _pure


def bench(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def kernel_cases(rng):
    small = rng.uniform(-10, 10, size=(32, 8))
    small2 = rng.uniform(-10, 10, size=(32, 8))
    big = rng.uniform(-10, 10, size=(256, 8))
    big2 = rng.uniform(-10, 10, size=(256, 8))
    return [
        ("hausdorff 32x32 d8 linf x1000", lambda impl: [impl.hausdorff(small, small2, 0) for _ in range(1000)]),
        ("hausdorff 256x256 d8 l2 x50", lambda impl: [impl.hausdorff(big, big2, 1) for _ in range(50)]),
        ("diameter 256 d8 linf x50", lambda impl: [impl.diameter(big, 0) for _ in range(50)]),
        ("bottleneck 32 d8 linf x100", lambda impl: [impl.bottleneck(small, small2, 0) for _ in range(100)]),
        ("bottleneck 256 d8 l2 x3", lambda impl: [impl.bottleneck(big, big2, 1) for _ in range(3)]),
    ]


def campaign_seconds(backend):
    env = dict(os.environ, CHEBSTAB_BACKEND=backend)
    code = (
        "import time, chebstab\n"
        "cfg = chebstab.CampaignConfig(seed=1729, trials=2000)\n"
        "t0 = time.perf_counter()\n"
        "report = chebstab.run_check('theorem2', cfg)\n"
        "assert report.passed\n"
        "print(time.perf_counter() - t0)\n"
    )
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True
    )
    return float(out.stdout.strip())


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    native, pure = _load_backends()
    if native is None:
        print("compiled kernel not built; showing pure backend only")

    rng = np.random.default_rng(0)
    rows = []
    for label, work in kernel_cases(rng):
        t_pure = bench(lambda: work(pure), args.repeats)
        if native is not None:
            t_native = bench(lambda: work(native), args.repeats)
            rows.append((label, t_native, t_pure, t_pure / t_native))
        else:
            rows.append((label, float("nan"), t_pure, float("nan")))

    print(f"{'case':40s} {'native s':>10s} {'pure s':>10s} {'speedup':>8s}")
    for label, t_native, t_pure, speedup in rows:
        print(f"{label:40s} {t_native:10.4f} {t_pure:10.4f} {speedup:8.1f}x")

    if native is not None:
        t_nat = campaign_seconds("native")
        t_pur = campaign_seconds("pure")
        print(f"{'theorem2 campaign, 2000 trials':40s} {t_nat:10.3f} {t_pur:10.3f} "
              f"{t_pur / t_nat:8.1f}x")


if __name__ == "__main__":
    main()
