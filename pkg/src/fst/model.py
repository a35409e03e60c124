"""Desk-scale models of W(Λ) by exact linear algebra.

Level 1: ``Q(L_r)`` is the polynomial ring on ``x_ij(-n)``, ``n >= 1``, modulo
the ideal generated by the truncated level-1 relations and by ``x_ij(-1)``
for ``j <= r``.  It is bigraded by total depth and by the row/column
multiset, and each graded piece is row-reduced on its own.  Its dimension
must equal the number of monomials satisfying DC and IC.

Higher level: ``W(Λ)`` is realized inside a tensor product of level-1 models,
with ``x(-n)`` acting on the tensor product as the sum over slots.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .basis import iter_basis, iter_monomials
from .conditions import satisfies_dc_ic
from .core import Monomial, Variable, Weight, color_weight, colors, format_monomial
from .linalg import Field, field_for, rank, rref
from .relations import graded_relations

__all__ = [
    "DimensionMismatch",
    "RankMismatch",
    "CutoffExceeded",
    "QuotientModel",
    "TensorVector",
    "build_level1_model",
    "normal_form",
    "act",
    "highest_weight_vector",
    "tensor_apply",
    "verify_independence",
    "IndependenceReport",
]


class DimensionMismatch(AssertionError):
    def __init__(self, degree: int, expected: int, got: int, detail: str = ""):
        super().__init__(f"degree {degree}: quotient dimension {got}, expected {expected}{detail}")
        self.degree, self.expected, self.got = degree, expected, got


class RankMismatch(AssertionError):
    def __init__(self, degree: int, expected: int, got: int):
        super().__init__(f"degree {degree}: rank {got}, expected {expected}")
        self.degree, self.expected, self.got = degree, expected, got


class CutoffExceeded(ValueError):
    pass


@dataclass
class _Block:
    monomials: list[Monomial]
    # non-standard monomial -> its normal form over standard monomials
    rewrite: dict[Monomial, dict[Monomial, object]]
    standard: list[Monomial]


@dataclass
class QuotientModel:
    ell: int
    r: int
    cutoff: int
    field: Field
    blocks: dict[tuple[int, tuple[int, ...]], _Block]
    dims: list[int]

    @property
    def weight(self) -> Weight:
        return Weight.fundamental(self.ell, self.r)

    def basis(self, degree: int) -> list[Monomial]:
        out = []
        for (n, _), b in self.blocks.items():
            if n == degree:
                out.extend(b.standard)
        return sorted(out, key=lambda m: m.key)


def _by_weight(ell: int, degree: int) -> dict[tuple[int, ...], list[Monomial]]:
    groups: dict[tuple[int, ...], list[Monomial]] = defaultdict(list)
    for m in iter_monomials(ell, degree):
        groups[color_weight(m, ell)].append(m)
    return groups


def _sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...] | None:
    d = tuple(x - y for x, y in zip(a, b))
    return d if min(d, default=0) >= 0 else None


def _reduce_block(args):
    ell, r, degree, wt, cols, rows, mode = args
    F = field_for(mode)
    index = {m: t for t, m in enumerate(cols)}
    sparse_rows = [{index[m]: c for m, c in row.items()} for row in rows]
    red = rref(sparse_rows, len(cols), F)
    pivot_set = set(red)
    standard = [m for t, m in enumerate(cols) if t not in pivot_set]
    rewrite = {
        cols[p]: {cols[c]: F.neg(v) for c, v in row.items() if c != p}
        for p, row in red.items()
    }
    return (degree, wt), _Block(cols, rewrite, standard)


def build_level1_model(ell: int, r: int, cutoff: int, mode: str = "prime", jobs: int = 1) -> QuotientModel:
    """Build ``Q(L_r)`` up to total depth ``cutoff`` and check its dimensions.

    Raises :class:`DimensionMismatch` if a graded piece of the quotient does
    not have as many elements as there are DC/IC monomials of that degree.
    """
    if not 0 <= r <= ell:
        raise ValueError(f"fundamental index {r} out of range 0..{ell}")
    if cutoff < 0:
        raise ValueError("cutoff must be non-negative")
    F = field_for(mode)
    w = Weight.fundamental(ell, r)
    grouped = {n: _by_weight(ell, n) for n in range(cutoff + 1)}
    ic_gens = [Variable(c.i, c.j, 1) for c in colors(ell) if c.j <= r]

    tasks = []
    for n in range(cutoff + 1):
        for wt, cols in sorted(grouped[n].items()):
            rows: list[dict[Monomial, object]] = []
            for n_rel in range(2, n + 1):
                for rel in graded_relations(ell, 1, n_rel):
                    rest = _sub(wt, rel.key)
                    if rest is None:
                        continue
                    for mu in grouped[n - n_rel].get(rest, ()):
                        rows.append({mu * m: c for m, c in rel.terms.items()})
            if n >= 1:
                for g in ic_gens:
                    rest = _sub(wt, color_weight((g,), ell))
                    if rest is None:
                        continue
                    for mu in grouped[n - 1].get(rest, ()):
                        rows.append({mu * g: 1})
            tasks.append((ell, r, n, wt, cols, rows, mode))

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_reduce_block, tasks))
    else:
        results = [_reduce_block(t) for t in tasks]
    blocks = dict(results)

    dims = [0] * (cutoff + 1)
    for (n, wt), block in sorted(blocks.items()):
        expected = [m for m in block.monomials if satisfies_dc_ic(m, w)]
        got = len(block.standard)
        if got != len(expected):
            raise DimensionMismatch(n, len(expected), got, f" (weight block {wt})")
        if set(expected) != set(block.standard):
            raise DimensionMismatch(n, len(expected), got, f" (standard monomials differ from DC/IC set in block {wt})")
        dims[n] += got
    return QuotientModel(ell, r, cutoff, F, blocks, dims)


def normal_form(model: QuotientModel, m: Monomial) -> dict[Monomial, object]:
    """Coordinates of the class of ``m`` over the DC/IC monomials of its degree."""
    if any(v.depth < 1 for v in m):
        raise ValueError("normal_form needs factors of depth >= 1")
    n = m.degree
    if n > model.cutoff:
        raise CutoffExceeded(f"degree {n} exceeds model cutoff {model.cutoff}")
    block = model.blocks.get((n, color_weight(m, model.ell)))
    if block is None:
        raise ValueError(f"monomial {format_monomial(m)} outside rank {model.ell}")
    if m in block.rewrite:
        return dict(block.rewrite[m])
    return {m: model.field(1)}


def act(model: QuotientModel, v: Variable, vec: dict[Monomial, object]) -> dict[Monomial, object]:
    """Multiply a coordinate vector by ``v`` and renormalize."""
    if v.depth < 1:
        raise ValueError("act needs a variable of depth >= 1")
    F = model.field
    out: dict[Monomial, object] = {}
    for b, c in vec.items():
        for b2, c2 in normal_form(model, b * v).items():
            out[b2] = F.reduce(out.get(b2, 0) + c * c2)
    return {b: c for b, c in out.items() if c}


@dataclass
class TensorVector:
    slots: tuple[int, ...]
    degree: int
    coords: dict[tuple[Monomial, ...], object] = field(default_factory=dict)


def highest_weight_vector(w: Weight, field: Field) -> TensorVector:
    slots = tuple(w.slots())
    return TensorVector(slots, 0, {tuple(Monomial() for _ in slots): field(1)})


class _SlotAction:
    """Memoized action of single variables on basis monomials of one model."""

    def __init__(self, model: QuotientModel):
        self.model = model
        self.cache: dict[tuple[Variable, Monomial], dict[Monomial, object]] = {}

    def __call__(self, v: Variable, b: Monomial) -> dict[Monomial, object]:
        key = (v, b)
        hit = self.cache.get(key)
        if hit is None:
            hit = act(self.model, v, {b: self.model.field(1)})
            self.cache[key] = hit
        return hit


def _apply_variable(actions: list[_SlotAction], F: Field, v: Variable, vec: TensorVector) -> TensorVector:
    out: dict[tuple[Monomial, ...], object] = {}
    for key, c in vec.coords.items():
        for s, action in enumerate(actions):
            for b2, c2 in action(v, key[s]).items():
                k2 = key[:s] + (b2,) + key[s + 1 :]
                out[k2] = F.reduce(out.get(k2, 0) + c * c2)
    return TensorVector(vec.slots, vec.degree + v.depth, {k: c for k, c in out.items() if c})


def tensor_apply(models: dict[int, QuotientModel], m: Monomial, base: TensorVector) -> TensorVector:
    """Act by ``m`` on a tensor vector, each factor through the coproduct."""
    F = _common_field(models)
    actions = [_SlotAction(models[r]) for r in base.slots]
    vec = base
    for v in m:
        vec = _apply_variable(actions, F, v, vec)
    return vec


def _common_field(models: dict[int, QuotientModel]) -> Field:
    fields = {mdl.field for mdl in models.values()}
    if len(fields) != 1:
        raise ValueError("models use different scalar modes")
    return fields.pop()


@dataclass
class IndependenceReport:
    weight: Weight
    mode: str
    degrees: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(d["ok"] for d in self.degrees)

    def to_json(self) -> dict:
        return {"weight": str(self.weight), "degrees": self.degrees, "mode": self.mode}


def _block_rank(vectors: list[TensorVector], ell: int, F: Field, weights: list[tuple[int, ...]]) -> int:
    groups: dict[tuple[int, ...], list[TensorVector]] = defaultdict(list)
    for vec, wt in zip(vectors, weights):
        groups[wt].append(vec)
    total = 0
    for vecs in groups.values():
        index: dict[tuple[Monomial, ...], int] = {}
        for vec in vecs:
            for k in vec.coords:
                index.setdefault(k, len(index))
        total += rank([{index[k]: c for k, c in vec.coords.items()} for vec in vecs], len(index), F)
    return total


class _Images:
    """Images ``x(pi) v_Λ`` with prefix sharing between monomials."""

    def __init__(self, models: dict[int, QuotientModel], w: Weight, F: Field):
        self.F = F
        self.actions = {r: _SlotAction(mdl) for r, mdl in models.items()}
        self.slots = tuple(w.slots())
        self.memo: dict[Monomial, TensorVector] = {Monomial(): highest_weight_vector(w, F)}

    def __call__(self, m: Monomial) -> TensorVector:
        hit = self.memo.get(m)
        if hit is not None:
            return hit
        # peel the greatest factor; the rest is shared with many neighbours
        rest = Monomial(m.factors[:-1])
        base = self(rest)
        vec = _apply_variable([self.actions[r] for r in self.slots], self.F, m.factors[-1], base)
        self.memo[m] = vec
        return vec


def _degree_entry(degree: int, ell: int, w: Weight, images: _Images) -> dict:
    basis = list(iter_basis(ell, w, degree))
    everything = list(iter_monomials(ell, degree))
    F = images.F
    r_basis = _block_rank([images(m) for m in basis], ell, F, [color_weight(m, ell) for m in basis])
    r_all = _block_rank([images(m) for m in everything], ell, F, [color_weight(m, ell) for m in everything])
    count = len(basis)
    return {"N": degree, "count": count, "rankBasis": r_basis, "rankAll": r_all, "ok": r_basis == count == r_all}


def verify_independence(
    ell: int,
    w: Weight,
    max_degree: int,
    mode: str = "prime",
    models: dict[int, QuotientModel] | None = None,
    *,
    strict: bool = False,
) -> IndependenceReport:
    """Rank of the DC/IC monomial images and of all monomial images, per degree.

    Both must equal the number of DC/IC monomials.  Ranks are computed per
    row/column-multiset block, since images of different blocks are supported
    on disjoint sets of tensor basis vectors.
    """
    if w.ell != ell:
        raise ValueError(f"weight {w} does not have rank {ell}")
    F = field_for(mode)
    if models is None:
        models = {r: build_level1_model(ell, r, max_degree, mode) for r in sorted(set(w.slots()))}
    for r in set(w.slots()):
        if models[r].cutoff < max_degree:
            raise CutoffExceeded(f"model for L{r} has cutoff {models[r].cutoff} < {max_degree}")
    images = _Images(models, w, F)
    report = IndependenceReport(w, mode)
    for degree in range(max_degree + 1):
        entry = _degree_entry(degree, ell, w, images)
        report.degrees.append(entry)
        if strict and not entry["ok"]:
            raise RankMismatch(degree, entry["count"], min(entry["rankBasis"], entry["rankAll"]))
    return report
