"""Hot inner loops, compiled with numba when available.

Two kernels live here:

* ``rref_mod_p`` -- reduced row echelon form of a dense int64 matrix over
  the prime field of order ``PRIME``; pivots are taken leftmost.
* ``antichain_sizes`` -- for a batch of monomials given as padded
  ``(depth, i, j)`` arrays, the size of a maximum antichain of each factor
  multiset under the strict order ⊏, via maximum bipartite matching.

Each kernel has a numba version and a plain numpy/python version.  Set
``FST_DISABLE_NUMBA=1`` to force the fallback; both are always importable
under explicit names for testing and benchmarking.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

PRIME = 2**31 - 1

USE_NUMBA = numba is not None and os.environ.get("FST_DISABLE_NUMBA", "").lower() not in ("1", "true", "yes")


def _rref_mod_p_loops(a, p):
    a = a.copy()
    rows, cols = a.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for s in range(r, rows):
            if a[s, c] != 0:
                piv = s
                break
        if piv < 0:
            continue
        if piv != r:
            for t in range(cols):
                tmp = a[r, t]
                a[r, t] = a[piv, t]
                a[piv, t] = tmp
        # Fermat inverse; entries < 2**31 so products fit in int64
        inv = 1
        base = a[r, c]
        e = p - 2
        while e > 0:
            if e & 1:
                inv = (inv * base) % p
            base = (base * base) % p
            e >>= 1
        for t in range(c, cols):
            a[r, t] = (a[r, t] * inv) % p
        for s in range(rows):
            if s != r and a[s, c] != 0:
                f = a[s, c]
                for t in range(c, cols):
                    if a[r, t] != 0:
                        a[s, t] = (a[s, t] - f * a[r, t]) % p
        pivots[r] = c
        r += 1
    return a[:r].copy(), pivots[:r].copy()


def rref_mod_p_numpy(a: np.ndarray, p: int = PRIME) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized fallback: one column sweep at a time with whole-matrix updates."""
    a = np.asarray(a, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = (a[r, c:] * inv) % p
        f = a[:, c].copy()
        f[r] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            a[np.ix_(hit, np.arange(c, cols))] = (
                a[np.ix_(hit, np.arange(c, cols))] - (f[hit, None] * a[r, c:]) % p
            ) % p
        pivots.append(c)
        r += 1
    return a[:r].copy(), np.array(pivots, dtype=np.int64)


def _antichain_size_one(depth, ii, jj, n):
    # Kuhn's augmenting paths on the comparability graph left->right
    adj = np.zeros((n, n), dtype=np.bool_)
    for u in range(n):
        for v in range(n):
            d = depth[u] - depth[v]
            if d >= 2 or (d == 1 and jj[u] > ii[v]) or (d == 0 and ii[u] > ii[v] and jj[u] > jj[v]):
                adj[u, v] = True
    match_r = -np.ones(n, dtype=np.int64)
    matched = 0
    stack = np.empty(n, dtype=np.int64)
    it = np.empty(n, dtype=np.int64)
    via = np.empty(n, dtype=np.int64)
    for root in range(n):
        seen = np.zeros(n, dtype=np.bool_)
        # iterative DFS; stack holds left vertices, via the right vertex taken at each level
        top = 0
        stack[0] = root
        it[0] = 0
        found = -1
        while top >= 0:
            u = stack[top]
            advanced = False
            while it[top] < n:
                v = it[top]
                it[top] += 1
                if adj[u, v] and not seen[v]:
                    seen[v] = True
                    via[top] = v
                    if match_r[v] < 0:
                        found = v
                        break
                    top += 1
                    stack[top] = match_r[v]
                    it[top] = 0
                    advanced = True
                    break
            if found >= 0:
                break
            if not advanced:
                top -= 1
        if found >= 0:
            # flip the alternating path recorded in via[0..top]
            for lvl in range(top, -1, -1):
                v = via[lvl]
                match_r[v] = stack[lvl]
            matched += 1
    return n - matched


def _antichain_sizes_loops(depth, ii, jj, lengths):
    out = np.empty(lengths.shape[0], dtype=np.int64)
    for b in range(lengths.shape[0]):
        out[b] = _antichain_size_one(depth[b], ii[b], jj[b], lengths[b])
    return out


_antichain_size_one_py = _antichain_size_one

if numba is not None:
    _antichain_size_one = numba.njit(cache=True)(_antichain_size_one)
    antichain_sizes_numba = numba.njit(cache=True)(_antichain_sizes_loops)
    rref_mod_p_numba = numba.njit(cache=True)(_rref_mod_p_loops)
else:  # pragma: no cover
    antichain_sizes_numba = None
    rref_mod_p_numba = None


def antichain_sizes_python(depth, ii, jj, lengths) -> np.ndarray:
    """Interpreted fallback of :func:`antichain_sizes`."""
    return np.array(
        [_antichain_size_one_py(depth[b], ii[b], jj[b], int(lengths[b])) for b in range(len(lengths))],
        dtype=np.int64,
    )


def rref_mod_p(a: np.ndarray, p: int = PRIME) -> tuple[np.ndarray, np.ndarray]:
    a = np.ascontiguousarray(np.asarray(a, dtype=np.int64) % p)
    if a.size == 0:
        return a[:0].copy(), np.empty(0, dtype=np.int64)
    if USE_NUMBA:
        return rref_mod_p_numba(a, p)
    return rref_mod_p_numpy(a, p)


def antichain_sizes(depth: np.ndarray, ii: np.ndarray, jj: np.ndarray, lengths: np.ndarray) -> np.ndarray:
    depth, ii, jj = (np.ascontiguousarray(x, dtype=np.int64) for x in (depth, ii, jj))
    lengths = np.ascontiguousarray(lengths, dtype=np.int64)
    if USE_NUMBA:
        return antichain_sizes_numba(depth, ii, jj, lengths)
    return antichain_sizes_python(depth, ii, jj, lengths)
