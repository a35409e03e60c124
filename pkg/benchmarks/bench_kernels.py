"""Compare the compiled kernels with their numpy/python fallbacks.

    python benchmarks/bench_kernels.py [--repeat 3]

Compilation happens once before timing.  Each line reports the best of
``--repeat`` runs and checks that both paths return the same arrays.
"""

import argparse
import itertools
import time

import numpy as np

from fst import kernels
from fst.core import Monomial, Variable, colors


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def rref_case(rows, cols, seed=0):
    rng = np.random.default_rng(seed)
    # sparse-ish integer matrix with rank deficiency, like the relation blocks
    a = rng.integers(-2, 3, size=(rows, cols), dtype=np.int64) * (rng.random((rows, cols)) < 0.2)
    a[rows // 2 :] = a[: rows - rows // 2] * 3 % kernels.PRIME
    return a % kernels.PRIME


def antichain_case(ell, max_depth, length):
    vs = [Variable(c.i, c.j, n) for n in range(1, max_depth + 1) for c in colors(ell)]
    ms = [Monomial.of(c) for c in itertools.combinations_with_replacement(vs, length)]
    depth = np.array([[v.depth for v in m] for m in ms], dtype=np.int64)
    ii = np.array([[v.i for v in m] for m in ms], dtype=np.int64)
    jj = np.array([[v.j for v in m] for m in ms], dtype=np.int64)
    return depth, ii, jj, np.full(len(ms), length, dtype=np.int64)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if kernels.rref_mod_p_numba is None:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"{'kernel':<28}{'size':>16}{'numba s':>12}{'fallback s':>12}{'speedup':>10}")
    for rows, cols in ((100, 120), (300, 400), (600, 800)):
        a = rref_case(rows, cols)
        kernels.rref_mod_p_numba(a[:2, :2].copy(), kernels.PRIME)
        t_jit, (r1, p1) = best_of(lambda: kernels.rref_mod_p_numba(a, kernels.PRIME), args.repeat)
        t_np, (r2, p2) = best_of(lambda: kernels.rref_mod_p_numpy(a, kernels.PRIME), args.repeat)
        assert np.array_equal(r1, r2) and np.array_equal(p1, p2)
        print(f"{'rref_mod_p':<28}{f'{rows}x{cols}':>16}{t_jit:>12.4f}{t_np:>12.4f}{t_np / t_jit:>9.1f}x")

    for ell, depth, length in ((2, 4, 6), (3, 4, 5), (3, 4, 6)):
        case = antichain_case(ell, depth, length)
        kernels.antichain_sizes_numba(*(x[:1] for x in case))
        t_jit, w1 = best_of(lambda: kernels.antichain_sizes_numba(*case), args.repeat)
        t_py, w2 = best_of(lambda: kernels.antichain_sizes_python(*case), args.repeat)
        assert np.array_equal(w1, w2)
        size = f"{len(case[3])} monos"
        print(f"{f'antichain_sizes l={ell} len={length}':<28}{size:>16}{t_jit:>12.4f}{t_py:>12.4f}{t_py / t_jit:>9.1f}x")


if __name__ == "__main__":
    main()
