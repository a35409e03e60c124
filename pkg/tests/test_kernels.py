import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from fst import kernels
from fst.conditions import antichain_width, antichain_widths
from fst.core import monomials_of_degree
from fst.linalg import PRIME_FIELD, _rref_sparse

needs_numba = pytest.mark.skipif(kernels.rref_mod_p_numba is None, reason="numba not installed")


def sparse_reference(a, p):
    rows = [{c: int(v) for c, v in enumerate(row) if v % p} for row in a]
    red = _rref_sparse(rows, PRIME_FIELD)
    out = np.zeros((len(red), a.shape[1]), dtype=np.int64)
    for r, c in enumerate(sorted(red)):
        for k, v in red[c].items():
            out[r, k] = v
    return out, np.array(sorted(red), dtype=np.int64)


matrices = arrays(np.int64, st.tuples(st.integers(1, 9), st.integers(1, 9)), elements=st.integers(-3, 3))


@given(matrices)
@settings(max_examples=60, deadline=None)
def test_rref_numpy_matches_sparse(a):
    red, piv = kernels.rref_mod_p_numpy(a % kernels.PRIME, kernels.PRIME)
    ref, ref_piv = sparse_reference(a, kernels.PRIME)
    assert np.array_equal(piv, ref_piv)
    assert np.array_equal(red, ref)


@needs_numba
@given(matrices)
@settings(max_examples=60, deadline=None)
def test_rref_numba_matches_numpy(a):
    a = np.ascontiguousarray(a % kernels.PRIME)
    r1, p1 = kernels.rref_mod_p_numba(a, kernels.PRIME)
    r2, p2 = kernels.rref_mod_p_numpy(a, kernels.PRIME)
    assert np.array_equal(p1, p2) and np.array_equal(r1, r2)


def test_rref_large_entries_do_not_overflow():
    p = kernels.PRIME
    rng = np.random.default_rng(7)
    a = rng.integers(0, p, size=(12, 15), dtype=np.int64)
    red, piv = kernels.rref_mod_p(a, p)
    ref, ref_piv = sparse_reference(a, p)
    assert np.array_equal(red, ref) and np.array_equal(piv, ref_piv)


def test_rref_empty():
    red, piv = kernels.rref_mod_p(np.zeros((0, 3), dtype=np.int64))
    assert red.shape[0] == 0 and piv.size == 0


def _pack(ms):
    width = max(len(m) for m in ms)
    depth = np.zeros((len(ms), width), dtype=np.int64)
    ii = np.zeros_like(depth)
    jj = np.zeros_like(depth)
    for b, m in enumerate(ms):
        for t, v in enumerate(m.factors):
            depth[b, t], ii[b, t], jj[b, t] = v.depth, v.i, v.j
    return depth, ii, jj, np.array([len(m) for m in ms], dtype=np.int64)


def test_antichain_kernels_agree():
    ms = [m for n in range(1, 7) for m in monomials_of_degree(3, n)]
    packed = _pack(ms)
    expected = np.array([antichain_width(m) for m in ms])
    assert np.array_equal(kernels.antichain_sizes_python(*packed), expected)
    if kernels.antichain_sizes_numba is not None:
        assert np.array_equal(kernels.antichain_sizes_numba(*packed), expected)
    assert np.array_equal(antichain_widths(ms), expected)


def test_fallback_flag():
    env = dict(os.environ, FST_DISABLE_NUMBA="1")
    code = (
        "from fst import kernels; from fst.model import build_level1_model;"
        "print(kernels.USE_NUMBA, build_level1_model(2, 0, 5).dims)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False [1, 3, 4, 7, 13, 19]"
