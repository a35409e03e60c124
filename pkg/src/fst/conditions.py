"""Difference and initial conditions on monomials.

Two independent routes decide the difference conditions at level ``k``:

* :func:`satisfies_dc` -- a monomial passes iff every ⊏-antichain among its
  factors (counted with multiplicity) has at most ``k`` elements.  The width
  comes from a minimum chain cover computed by bipartite matching.
* :func:`satisfies_dc_oracle` -- brute force over every admissible pair of
  diagonal paths (a deep path at depth ``n+1`` followed by a shallow one at
  depth ``n``), summing exponents along them.

The second one never touches ⊏ and is kept as ground truth for tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator

import numpy as np

from . import kernels
from .core import Color, Monomial, Variable, Weight, colors, precedes
from .poset import ChainDecomposition

__all__ = [
    "DcReport",
    "LeadingShape",
    "satisfies_dc",
    "satisfies_dc_oracle",
    "satisfies_ic",
    "with_imaginary_part",
    "satisfies_dc_ic",
    "enumerate_leading_shapes",
    "nested_paths",
    "path_skeletons",
    "max_path_load",
    "antichain_width",
    "antichain_widths",
    "max_path_loads",
]


@dataclass(frozen=True)
class DcReport:
    satisfied: bool
    witness: Monomial | None = None

    def __bool__(self) -> bool:
        return self.satisfied


def _check_depths(m: Monomial, allow_imaginary: bool) -> None:
    lowest = 0 if allow_imaginary else 1
    for v in m:
        if v.depth < lowest:
            raise ValueError(f"factor {v!r} has depth {v.depth}; conditions need depth >= {lowest}")


def antichain_width(m: Monomial) -> int:
    """Size of a maximum ⊏-antichain of the factor multiset."""
    f = m.factors
    return ChainDecomposition(len(f), lambda u, v: precedes(f[u], f[v])).width


def antichain_widths(monomials: list[Monomial]) -> np.ndarray:
    """Batched :func:`antichain_width` through the compiled kernel."""
    if not monomials:
        return np.empty(0, dtype=np.int64)
    width = max(len(m) for m in monomials) or 1
    depth = np.zeros((len(monomials), width), dtype=np.int64)
    ii = np.zeros_like(depth)
    jj = np.zeros_like(depth)
    lengths = np.empty(len(monomials), dtype=np.int64)
    for b, m in enumerate(monomials):
        lengths[b] = len(m)
        for t, v in enumerate(m.factors):
            depth[b, t], ii[b, t], jj[b, t] = v.depth, v.i, v.j
    return kernels.antichain_sizes(depth, ii, jj, lengths)


def satisfies_dc(m: Monomial, level: int, *, allow_imaginary: bool = False) -> DcReport:
    """Difference conditions at ``level``, with a violating antichain when they fail."""
    _check_depths(m, allow_imaginary)
    f = m.factors
    dec = ChainDecomposition(len(f), lambda u, v: precedes(f[u], f[v]))
    if dec.width <= level:
        return DcReport(True)
    return DcReport(False, Monomial.of(f[x] for x in dec.antichain()))


@lru_cache(maxsize=None)
def nested_paths(ell: int) -> tuple[tuple[Color, ...], ...]:
    """Nonempty sequences of distinct colors with rows weakly rising and columns weakly falling.

    These are the diagonal paths ``i1 <= i2 <= ... <= it <= jt <= ... <= j1``;
    the first color is the outermost one.
    """
    cols = colors(ell)
    out: list[tuple[Color, ...]] = []

    def grow(path: tuple[Color, ...]) -> None:
        out.append(path)
        last = path[-1]
        for c in cols:
            if c != last and c.i >= last.i and c.j <= last.j:
                grow(path + (c,))

    for c in cols:
        grow((c,))
    return tuple(out)


@lru_cache(maxsize=None)
def path_skeletons(ell: int) -> tuple[tuple[tuple[Color, ...], tuple[Color, ...]], ...]:
    """Pairs (deep, shallow) of paths, either possibly empty but not both.

    The deep path's outer column must not exceed the shallow path's outer row.
    """
    paths = ((),) + nested_paths(ell)
    return tuple(
        (deep, shallow)
        for deep in paths
        for shallow in paths
        if (deep or shallow) and (not deep or not shallow or deep[0].j <= shallow[0].i)
    )


def max_path_load(m: Monomial, ell: int | None = None) -> int:
    """Largest exponent sum collected by one path skeleton over any depth."""
    if not m.factors:
        return 0
    if ell is None:
        ell = max(v.j for v in m)
    depths = {v.depth for v in m}
    best = 0
    for n in depths | {d - 1 for d in depths}:
        shallow_exp = m.at_depth(n)
        deep_exp = m.at_depth(n + 1)
        for deep, shallow in path_skeletons(ell):
            load = sum(deep_exp[c] for c in deep) + sum(shallow_exp[c] for c in shallow)
            best = max(best, load)
    return best


def max_path_loads(monomials: list[Monomial], ell: int, chunk: int = 8192) -> np.ndarray:
    """Batched :func:`max_path_load` with numpy; no matching involved."""
    if not monomials:
        return np.empty(0, dtype=np.int64)
    if len(monomials) > chunk:
        return np.concatenate(
            [max_path_loads(monomials[s : s + chunk], ell, chunk) for s in range(0, len(monomials), chunk)]
        )
    cols = colors(ell)
    cidx = {c: t for t, c in enumerate(cols)}
    top = max((v.depth for m in monomials for v in m), default=0)
    # exponents[b, n, c]; a spare depth row keeps n+1 in range
    exps = np.zeros((len(monomials), top + 2, len(cols)), dtype=np.int64)
    for b, m in enumerate(monomials):
        for v in m:
            exps[b, v.depth, cidx[v.color]] += 1
    paths = nested_paths(ell)
    incidence = np.zeros((len(cols), len(paths) + 1), dtype=np.int64)  # last column: empty path
    for p, path in enumerate(paths):
        for c in path:
            incidence[cidx[c], p] = 1
    sums = exps @ incidence
    index = {path: p for p, path in enumerate(paths)}
    index[()] = len(paths)
    skel = path_skeletons(ell)
    deep = np.array([index[d] for d, _ in skel])
    shallow = np.array([index[s] for _, s in skel])
    loads = sums[:, 1:, :][:, :, deep] + sums[:, :-1, :][:, :, shallow]
    return loads.max(axis=(1, 2))


def satisfies_dc_oracle(m: Monomial, level: int, *, allow_imaginary: bool = False) -> bool:
    _check_depths(m, allow_imaginary)
    return max_path_load(m) <= level


def satisfies_ic(m: Monomial, w: Weight) -> bool:
    """Initial conditions: along every path of depth-1 colors, the exponent
    sum is at most ``k0 + ... + k_{j1-1}`` where ``j1`` is the outer column."""
    _check_depths(m, False)
    a = m.at_depth(1)
    if not a:
        return True
    prefix = np.cumsum(w.coeffs)
    for path in nested_paths(w.ell):
        if sum(a[c] for c in path) > prefix[path[0].j - 1]:
            return False
    return True


def with_imaginary_part(m: Monomial, w: Weight) -> Monomial:
    """Append ``x_{i,l}(0)^{k_i}`` for ``i = 1..l``."""
    _check_depths(m, False)
    ell = w.ell
    extra = [Variable(i, ell, 0) for i in range(1, ell + 1) for _ in range(w.coeffs[i])]
    return Monomial.of(m.factors + tuple(extra))


def satisfies_dc_ic(m: Monomial, w: Weight) -> bool:
    return satisfies_dc(with_imaginary_part(m, w), w.level, allow_imaginary=True).satisfied


@dataclass(frozen=True)
class LeadingShape:
    """A monomial of ``k+1`` factors on a deep path at depth ``depth+1`` and a
    shallow path at ``depth``; exponents are paired with the path colors."""

    depth: int
    deep_path: tuple[tuple[Color, int], ...]
    shallow_path: tuple[tuple[Color, int], ...]
    level: int = field(default=0)

    def monomial(self) -> Monomial:
        fs = [Variable(c.i, c.j, self.depth + 1) for c, e in self.deep_path for _ in range(e)]
        fs += [Variable(c.i, c.j, self.depth) for c, e in self.shallow_path for _ in range(e)]
        return Monomial.of(fs)

    @property
    def total_degree(self) -> int:
        return self.monomial().degree

    def multiset(self, ell: int) -> tuple[int, ...]:
        """Counts ``(m_1, ..., m_l)`` of the row/column multiset."""
        counts = [0] * ell
        for c, e in self.deep_path + self.shallow_path:
            counts[c.i - 1] += e
            counts[c.j - 1] += e
        return tuple(counts)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_leading_shapes(ell: int, level: int, degree: int) -> list[LeadingShape]:
    """All leading-term shapes of total degree ``degree`` at ``level``.

    With ``degree = (level+1)*n + m``, ``0 <= m <= level``, a shape has ``m``
    factors at depth ``n+1`` and ``level+1-m`` at depth ``n``.
    """
    if degree < level + 1:
        return []
    n, m = divmod(degree, level + 1)
    paths = ((),) + nested_paths(ell)
    out = []
    for deep in paths:
        if len(deep) > m:
            continue
        for shallow in paths:
            if not shallow or len(shallow) > level + 1 - m:
                continue
            if deep and deep[0].j > shallow[0].i:
                continue
            for be, ae in product(_compositions(m, len(deep)), _compositions(level + 1 - m, len(shallow))):
                out.append(LeadingShape(n, tuple(zip(deep, be)), tuple(zip(shallow, ae)), level))
    return out
