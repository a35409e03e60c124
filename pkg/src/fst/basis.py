"""Basis monomials of W(Λ) by degree, and their graded dimensions."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Callable, Iterator

from .conditions import satisfies_dc_ic
from .core import Monomial, Variable, Weight, colors

__all__ = ["QSeries", "iter_monomials", "iter_basis", "enumerate_basis", "graded_series"]


def _variables_up_to(ell: int, degree: int) -> list[Variable]:
    # increasing variable order: deepest first, then by color
    return [Variable(c.i, c.j, n) for n in range(degree, 0, -1) for c in colors(ell)]


def iter_monomials(
    ell: int, degree: int, accept: Callable[[Monomial], bool] | None = None
) -> Iterator[Monomial]:
    """Monomials of total depth ``degree`` in increasing monomial order.

    Factors are chosen greatest first.  If ``accept`` is given it must be
    hereditary (closed under taking sub-multisets); any prefix it rejects is
    not extended.
    """
    pool = _variables_up_to(ell, degree)
    chosen: list[Variable] = []

    def rec(remaining: int, top: int) -> Iterator[Monomial]:
        if remaining == 0:
            yield Monomial(tuple(reversed(chosen)))
            return
        for idx in range(top + 1):
            v = pool[idx]
            rest = remaining - v.depth
            if rest < 0 or 0 < rest < v.depth:
                continue
            chosen.append(v)
            if accept is None or accept(Monomial(tuple(reversed(chosen)))):
                yield from rec(rest, idx)
            chosen.pop()

    if degree == 0:
        yield Monomial()
        return
    yield from rec(degree, len(pool) - 1)


def iter_basis(ell: int, w: Weight, degree: int) -> Iterator[Monomial]:
    """Stream the monomials of ``degree`` satisfying DC and IC for ``w``, in increasing order."""
    if w.ell != ell:
        raise ValueError(f"weight {w} does not have rank {ell}")
    return iter_monomials(ell, degree, partial(_dc_ic, w=w))


def _dc_ic(m: Monomial, w: Weight) -> bool:
    return satisfies_dc_ic(m, w)


def enumerate_basis(ell: int, w: Weight, degree: int) -> list[Monomial]:
    return list(iter_basis(ell, w, degree))


def _count(degree: int, ell: int, w: Weight) -> int:
    return sum(1 for _ in iter_basis(ell, w, degree))


@dataclass(frozen=True)
class QSeries:
    """Integer power series in ``q`` truncated after ``q^cutoff``."""

    coeffs: tuple[int, ...]

    @property
    def cutoff(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if n == 0:
                parts.append(str(c))
            else:
                mono = "q" if n == 1 else f"q^{n}"
                parts.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def graded_series(ell: int, w: Weight, cutoff: int, jobs: int = 1) -> QSeries:
    if cutoff < 0:
        raise ValueError("cutoff must be non-negative")
    count = partial(_count, ell=ell, w=w)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            coeffs = list(pool.map(count, range(cutoff + 1)))
    else:
        coeffs = [count(n) for n in range(cutoff + 1)]
    return QSeries(tuple(coeffs))
