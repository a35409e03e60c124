"""The relation space spanned by ``x_11(z)^(k+1)`` under the lowering operators.

The operators ``x_{-alpha_p}``, ``p = 1..l-1``, act on colors like a
derivation, and on a product of fields by the Leibniz rule::

    x_pj -> x_{p+1,j}   (p < j)
    x_ip -> x_{i,p+1}   (i < p)
    x_pp -> 2 x_{p,p+1}

Every weight space of the resulting module is one-dimensional, so one
polynomial per row/column multiset ``{1^m1, ..., l^ml}`` spans it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator

from .conditions import enumerate_leading_shapes, satisfies_dc
from .core import Color, Monomial, Variable, compare_monomials, format_monomial

__all__ = [
    "ColorPolynomial",
    "GradedRelation",
    "EmptyRelationError",
    "lower",
    "generate_relation_family",
    "expand_graded",
    "leading_term",
    "verify_leading_terms",
    "LeadingTermReport",
    "relation_to_json",
    "color_term_weight",
]

ColorTerm = tuple[Color, ...]
ColorPolynomial = dict[ColorTerm, Fraction]
RelationKey = tuple[int, ...]


class EmptyRelationError(ValueError):
    pass


def _sorted_term(cs) -> ColorTerm:
    return tuple(sorted(cs, key=lambda c: c.key))


def color_term_weight(term: ColorTerm, ell: int) -> RelationKey:
    w = [0] * ell
    for c in term:
        w[c.i - 1] += 1
        w[c.j - 1] += 1
    return tuple(w)


def _lower_color(p: int, c: Color) -> tuple[Color, int] | None:
    if c.i == p and c.j == p:
        return Color(p, p + 1), 2
    if c.i == p:
        return Color(p + 1, c.j), 1
    if c.j == p:
        return Color(c.i, p + 1), 1
    return None


def lower(p: int, poly: ColorPolynomial, ell: int) -> ColorPolynomial:
    if not 1 <= p <= ell - 1:
        raise ValueError(f"lowering index {p} out of range 1..{ell - 1}")
    out: dict[ColorTerm, Fraction] = {}
    for term, coeff in poly.items():
        for t, c in enumerate(term):
            img = _lower_color(p, c)
            if img is None:
                continue
            new_c, factor = img
            new_term = _sorted_term(term[:t] + (new_c,) + term[t + 1 :])
            out[new_term] = out.get(new_term, Fraction(0)) + coeff * factor
    return {t: c for t, c in out.items() if c != 0}


@lru_cache(maxsize=None)
def _family(ell: int, level: int) -> tuple[tuple[RelationKey, tuple[tuple[ColorTerm, Fraction], ...]], ...]:
    start: ColorPolynomial = {(Color(1, 1),) * (level + 1): Fraction(1)}
    top = color_term_weight(next(iter(start)), ell)
    table = {top: start}
    queue = deque([top])
    while queue:
        key = queue.popleft()
        for p in range(1, ell):
            img = lower(p, table[key], ell)
            if not img:
                continue
            new_key = color_term_weight(next(iter(img)), ell)
            if new_key not in table:
                table[new_key] = img
                queue.append(new_key)
    expected = comb(2 * level + 1 + ell, ell - 1)
    if len(table) != expected:
        raise AssertionError(f"relation family has {len(table)} keys, expected {expected}")
    return tuple(sorted((k, tuple(sorted(v.items(), key=lambda kv: [c.key for c in kv[0]]))) for k, v in table.items()))


def generate_relation_family(ell: int, level: int) -> dict[RelationKey, ColorPolynomial]:
    """One color polynomial per multiset of ``2(level+1)`` indices from ``1..ell``."""
    return {key: dict(terms) for key, terms in _family(ell, level)}


@dataclass(frozen=True)
class GradedRelation:
    key: RelationKey
    degree: int
    terms: dict[Monomial, Fraction] = field(hash=False)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda mc: mc[0].key)


def _ordered_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _ordered_compositions(total - first, parts - 1):
            yield (first,) + rest


def expand_graded(poly: ColorPolynomial, degree: int, ell: int | None = None) -> GradedRelation:
    """The coefficient relation of total depth ``degree``, every factor at depth >= 1.

    Factors of depth <= 0 annihilate the highest-weight vector after commuting
    to the right, so those compositions are dropped.  The result is scaled so
    its smallest monomial has coefficient 1.
    """
    first = next(iter(poly))
    if ell is None:
        ell = max(c.j for term in poly for c in term)
    key = color_term_weight(first, ell)
    size = len(first)
    acc: dict[Monomial, Fraction] = {}
    for term, coeff in poly.items():
        for comp in _ordered_compositions(degree, size):
            m = Monomial.of(Variable(c.i, c.j, n) for c, n in zip(term, comp))
            acc[m] = acc.get(m, Fraction(0)) + coeff
    terms = {m: c for m, c in acc.items() if c != 0}
    if terms:
        lead = min(terms, key=lambda m: m.key)
        scale = terms[lead]
        terms = {m: c / scale for m, c in terms.items()}
    return GradedRelation(key, degree, terms)


def leading_term(rel: GradedRelation) -> Monomial:
    if not rel.terms:
        raise EmptyRelationError(f"relation {rel.key} at degree {rel.degree} has no terms")
    lead = None
    for m in rel.terms:
        if lead is None or compare_monomials(m, lead) < 0:
            lead = m
    return lead


@lru_cache(maxsize=None)
def graded_relations(ell: int, level: int, degree: int) -> tuple[GradedRelation, ...]:
    """All truncated relations of one total degree, ordered by key."""
    if degree < level + 1:
        return ()
    return tuple(expand_graded(poly, degree, ell) for _, poly in sorted(generate_relation_family(ell, level).items()))


@dataclass
class LeadingTermReport:
    ell: int
    level: int
    max_degree: int
    checked: int = 0
    mismatches: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "level": self.level,
            "maxDegree": self.max_degree,
            "checked": self.checked,
            "mismatches": self.mismatches,
            "ok": self.ok,
        }


def verify_leading_terms(ell: int, level: int, max_degree: int) -> LeadingTermReport:
    """Compare the smallest monomial of every graded relation with the shape prediction."""
    report = LeadingTermReport(ell, level, max_degree)
    for degree in range(level + 1, max_degree + 1):
        predicted: dict[RelationKey, Monomial] = {}
        for shape in enumerate_leading_shapes(ell, level, degree):
            k = shape.multiset(ell)
            if k in predicted:
                report.mismatches.append({"degree": degree, "multiset": list(k), "problem": "two shapes for one multiset"})
            predicted[k] = shape.monomial()
        for rel in graded_relations(ell, level, degree):
            report.checked += 1
            lead = leading_term(rel)
            want = predicted.pop(rel.key, None)
            problem = None
            if want is None:
                problem = "no predicted shape"
            elif lead != want:
                problem = f"leading term {format_monomial(lead)}, predicted {format_monomial(want)}"
            elif satisfies_dc(lead, level).satisfied:
                problem = "leading term satisfies difference conditions"
            elif any(m != lead and compare_monomials(m, lead) <= 0 for m in rel.terms):
                problem = "leading term is not strictly smallest"
            if problem:
                report.mismatches.append({"degree": degree, "multiset": list(rel.key), "problem": problem})
        for k in predicted:
            report.mismatches.append({"degree": degree, "multiset": list(k), "problem": "shape without relation"})
    return report


def _fraction_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def relation_to_json(rel: GradedRelation) -> dict:
    return {
        "multiset": list(rel.key),
        "degree": rel.degree,
        "terms": [{"monomial": format_monomial(m), "coeff": _fraction_text(c)} for m, c in rel.sorted_terms()],
    }
