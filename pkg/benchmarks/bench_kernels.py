"""Compiled vs interpreted hot kernels.

Times the backtracking search and the batch PCF check three ways where
they apply: the numba kernel, the same function run as plain Python
(``.py_func``), and the vectorized numpy path.  The end-to-end row runs a
whole oracle call in a fresh interpreter with and without
``PCFCOLOR_DISABLE_NUMBA``, so it includes import and JIT cost.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from pcfcolor import _accel, kernels
from pcfcolor.generator import GenSpec, corpus, generate
from pcfcolor.oracle import degeneracy_order


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def search_case(name: str, h: int, k: int):
    if name.startswith("seed"):
        seed, n = map(int, name[4:].split("/"))
        g, _ = generate(GenSpec(seed, n))
    else:
        g, _ = corpus(name)
    nbr, deg = kernels.neighbor_table(g)
    order = np.asarray(degeneracy_order(g), dtype=np.int64)
    fixed = np.zeros(g.n, dtype=np.int64)
    req = np.minimum(deg, h)
    args = (nbr, deg, order, fixed, req, k, 10**8, True)
    return f"search {name} h={h} k={k}", args


def mask_case(name: str, h: int, rows: int):
    g, _ = corpus(name)
    nbr, deg = kernels.neighbor_table(g)
    cols = np.random.default_rng(0).integers(1, 6, size=(rows, g.n)).astype(np.int64)
    return f"pcf_mask {name} h={h} rows={rows}", g, (nbr, deg, cols, np.minimum(deg, h))


END_TO_END = "from pcfcolor.generator import corpus; from pcfcolor.oracle import min_k; print(min_k(corpus('prism(6)')[0], 3))"


def fresh_interpreter(disable: bool) -> float:
    env = dict(os.environ)
    env.pop(_accel.DISABLE_ENV, None)
    if disable:
        env[_accel.DISABLE_ENV] = "1"
    t0 = time.perf_counter()
    subprocess.run([sys.executable, "-c", END_TO_END], env=env, check=True, capture_output=True)
    return time.perf_counter() - t0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-subprocess", action="store_true")
    a = ap.parse_args()
    if not _accel.USE_NUMBA:
        sys.exit(f"numba is disabled ({_accel.DISABLE_ENV} set or numba missing); nothing to compare")

    rows = []
    # the last case is infeasible and expands about 4e4 nodes
    for name, h, k in (("cube", 2, 4), ("prism(12)", 3, 5), ("rhombic-dodecahedron", 3, 7), ("seed6/28", 2, 4)):
        label, args = search_case(name, h, k)
        kernels.search(*args)  # compile
        jit = best_of(lambda: kernels.search(*args), a.repeat)
        py = best_of(lambda: kernels.search.py_func(*args), a.repeat)
        rows.append((label, jit, py, None))

    for name, h, n_rows in (("c5", 2, 20000), ("cube", 3, 20000), ("grid(4,4)", 2, 5000)):
        label, g, args = mask_case(name, h, n_rows)
        kernels._pcf_mask_loop(*args)
        jit = best_of(lambda: kernels._pcf_mask_loop(*args), a.repeat)
        py = best_of(lambda: kernels._pcf_mask_loop.py_func(*args), a.repeat)
        vec = best_of(lambda: kernels.pcf_mask(g, args[2], h, backend="numpy"), a.repeat)
        rows.append((label, jit, py, vec))

    if not a.skip_subprocess:
        rows.append(("oracle min_k(prism(6),3), fresh process", fresh_interpreter(False), fresh_interpreter(True), None))

    width = max(len(r[0]) for r in rows)
    print(f"{'case':<{width}}  {'numba':>10}  {'python':>10}  {'numpy':>10}  {'speedup':>8}")
    for label, jit, py, vec in rows:
        v = f"{vec * 1e3:8.2f}ms" if vec is not None else f"{'-':>10}"
        print(f"{label:<{width}}  {jit * 1e3:8.2f}ms  {py * 1e3:8.2f}ms  {v}  {py / jit:7.1f}x")


if __name__ == "__main__":
    main()
