"""Exact row reduction over the rationals or the prime field of order 2^31 - 1.

Rows are sparse dicts ``{column: value}``; column indices double as the pivot
priority, so callers index columns by increasing monomial order to make the
pivot of every row its smallest monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from . import kernels

__all__ = ["Field", "RATIONAL", "PRIME_FIELD", "field_for", "rref", "rank"]


@dataclass(frozen=True)
class Field:
    name: str
    p: int | None = None

    def __call__(self, x) -> Fraction | int:
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def reduce(self, x):
        return x if self.p is None else x % self.p

    def inv(self, x):
        if self.p is None:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.p)

    def neg(self, x):
        return -x if self.p is None else (-x) % self.p


RATIONAL = Field("rational")
PRIME_FIELD = Field("prime", kernels.PRIME)


def field_for(mode: str) -> Field:
    if mode == "rational":
        return RATIONAL
    if mode == "prime":
        return PRIME_FIELD
    raise ValueError(f"unknown scalar mode {mode!r}; use 'rational' or 'prime'")


def _rref_sparse(rows: Iterable[dict[int, object]], field: Field) -> dict[int, dict[int, object]]:
    pivots: dict[int, dict[int, object]] = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                inv = field.inv(row[c])
                pivots[c] = {k: field.reduce(v * inv) for k, v in row.items()}
                break
            f = row[c]
            for k, v in prow.items():
                nv = field.reduce(row.get(k, 0) - f * v)
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    # back substitution, largest pivot first
    for c in sorted(pivots, reverse=True):
        prow = pivots[c]
        for d in list(prow):
            if d != c and d in pivots:
                f = prow[d]
                for k, v in pivots[d].items():
                    nv = field.reduce(prow.get(k, 0) - f * v)
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
    return pivots


def _rref_dense_prime(rows: list[dict[int, object]], ncols: int, field: Field) -> dict[int, dict[int, object]]:
    if not rows or ncols == 0:
        return {}
    a = np.zeros((len(rows), ncols), dtype=np.int64)
    for r, row in enumerate(rows):
        for c, v in row.items():
            a[r, c] = int(v) % field.p
    red, piv = kernels.rref_mod_p(a, field.p)
    out = {}
    for r, c in enumerate(piv):
        nz = np.flatnonzero(red[r])
        out[int(c)] = {int(k): int(red[r, k]) for k in nz}
    return out


def rref(rows: Iterable[dict[int, object]], ncols: int, field: Field) -> dict[int, dict[int, object]]:
    """Reduced row echelon form as ``{pivot column: row}``; each row has a 1
    at its pivot, its pivot is its smallest column, and no other row has an
    entry in a pivot column.

    Prime-field input goes through the dense compiled kernel; rationals stay
    sparse.
    """
    rows = [{c: field(v) for c, v in row.items()} for row in rows]
    if field.p is not None:
        return _rref_dense_prime(rows, ncols, field)
    return _rref_sparse(rows, field)


def rank(rows: Iterable[dict[int, object]], ncols: int, field: Field) -> int:
    return len(rref(rows, ncols, field))
