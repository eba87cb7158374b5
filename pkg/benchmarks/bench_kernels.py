"""Compare the numba and pure-numpy kernels on the workloads the engine runs.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each row reports the best of ``--repeat`` runs after one warm-up call (the
warm-up absorbs JIT compilation) and checks that both backends agree.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from abelrad import kernels
from abelrad.chevalley import build_basis
from abelrad.rootsys import build_root_system


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    rows = []
    for kind, n in [("A", 4), ("C", 4), ("D", 6), ("E", 6), ("E", 7), ("B", 8)]:
        B = build_basis(build_root_system(kind, n))
        table = B.structure_table()
        res = {}
        for be in ("numba", "numpy"):
            res[be] = best_of(lambda: kernels.jacobi_violations(*table, B.dim, backend=be), args.repeat)
        assert res["numba"][1][0] == res["numpy"][1][0]
        rows.append((f"jacobi {kind}{n} (dim {B.dim})", res["numba"][0], res["numpy"][0]))

    rng = np.random.default_rng(0)
    for size in (100, 300, 600):
        mat = rng.integers(-3, 4, size=(size, size)).astype(np.int64)
        mat[:, size // 2:] = mat[:, : size - size // 2] * 2  # rank deficient
        res = {be: best_of(lambda: kernels.rank_mod_p(mat, backend=be), args.repeat) for be in ("numba", "numpy")}
        assert res["numba"][1] == res["numpy"][1]
        rows.append((f"rank mod p {size}x{size}", res["numba"][0], res["numpy"][0]))

    print(f"{'workload':<28} {'numba s':>10} {'numpy s':>10} {'speedup':>8}")
    for name, a, b in rows:
        print(f"{name:<28} {a:>10.4f} {b:>10.4f} {b / a:>8.1f}x")


if __name__ == "__main__":
    main()
