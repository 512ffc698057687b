"""Compiled vs pure-Python kernels on the workloads the verifier runs.

    python3 benchmarks/bench_kernels.py [--repeat 3]

The Python column runs in a child process with NGLAB_DISABLE_JIT=1, so
kernels that call other kernels are measured without any compiled code.
Each kernel is called once beforehand so JIT compilation is excluded.
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

from nglab import kernels, oracles
from nglab._accel import JIT_ENABLED
from nglab.enumeration import labeled_keys
from nglab.generators import complete_multipartite, cycle, petersen


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def workloads():
    keys5 = labeled_keys(5)
    graphs = [petersen(), cycle(9), complete_multipartite((3, 3, 2))]
    mp = complete_multipartite((3, 2, 2))
    perms = oracles.automorphisms(mp).non_identity()
    reps = np.array(sorted(set(int(k) for k in keys5[:64])), np.int64)

    def chrom(fn):
        return lambda: fn(keys5, 5)

    def auts(fn):
        return lambda: [fn(g.array, np.int64(0)) for g in graphs]

    def dist(fn):
        return lambda: fn(mp.array, perms, 1, True)

    def canon(fn):
        return lambda: [fn(g.array) for g in graphs]

    def ext(fn):
        return lambda: fn(reps, 5)

    return [
        ("chromatic pairs, all 1024 labeled n=5", chrom(kernels.chromatic_pairs_for_keys)),
        ("automorphisms, 3 graphs n=8..10", auts(kernels.automorphism_kernel)),
        ("distinguishing chromatic, K_{3,2,2}", dist(kernels.min_distinguishing_colors)),
        ("canonical form, 3 graphs n=8..10", canon(kernels.canonical_kernel)),
        ("one-vertex extensions, 64 graphs n=5", ext(kernels.extension_keys)),
    ]


def measure(repeat):
    out = {}
    for name, fn in workloads():
        fn()
        out[name] = _best(fn, repeat)
    return out


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--json", action="store_true", help="print raw timings for this process and exit")
    args = parser.parse_args(argv)
    if args.json:
        print(json.dumps(measure(args.repeat)))
        return
    if not JIT_ENABLED:
        print("note: JIT disabled in this process, both columns run the Python path")
    fast = measure(args.repeat)
    env = dict(os.environ, NGLAB_DISABLE_JIT="1")
    proc = subprocess.run([sys.executable, __file__, "--json", "--repeat", "1"],
                          env=env, capture_output=True, text=True, check=True)
    slow = json.loads(proc.stdout)
    print(f"{'kernel':<42} {'jit (s)':>10} {'python (s)':>11} {'speedup':>8}")
    for name, t_fast in fast.items():
        t_slow = slow[name]
        print(f"{name:<42} {t_fast:>10.4f} {t_slow:>11.4f} {t_slow / max(t_fast, 1e-9):>7.1f}x")


if __name__ == "__main__":
    main()
