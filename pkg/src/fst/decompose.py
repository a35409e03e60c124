"""Split a level-k monomial into k level-1 monomials.

A monomial satisfying difference and initial conditions for
``k0*L0 + ... + kl*Ll`` is a product of ``k`` monomials, each satisfying
them at level 1 for some fundamental weight.  The split comes from a chain
cover of the factors (with the imaginary depth-0 factors added) under ⊏.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .conditions import satisfies_dc_oracle, satisfies_ic, with_imaginary_part
from .core import Monomial, Weight, format_monomial, monomials_of_degree, precedes
from .poset import ChainDecomposition

__all__ = [
    "Factorization",
    "FactorizationReport",
    "chain_cover",
    "factorize",
    "check_factorization",
    "verify_factorization_theorem",
]


@dataclass(frozen=True)
class Factorization:
    parts: tuple[Monomial, ...]
    assignments: tuple[int, ...]

    def to_json(self) -> dict:
        return {"parts": [format_monomial(p) for p in self.parts], "weights": list(self.assignments)}


def chain_cover(m: Monomial, level: int) -> list[Monomial] | None:
    """Partition the factors into exactly ``level`` ⊏-chains, or None.

    Chains come from a maximum matching on the comparability graph with
    vertices in increasing variable order; unused chains are empty.
    """
    f = m.factors
    dec = ChainDecomposition(len(f), lambda u, v: precedes(f[u], f[v]))
    if dec.width > level:
        return None
    chains = [Monomial(tuple(f[x] for x in c)) for c in dec.chains()]
    return chains + [Monomial()] * (level - len(chains))


def factorize(m: Monomial, w: Weight) -> Factorization | None:
    k = w.level
    chains = chain_cover(with_imaginary_part(m, w), k)
    if chains is None:
        return None
    tagged = []
    for chain in chains:
        imaginary = [v for v in chain if v.depth == 0]
        if len(imaginary) > 1:
            raise AssertionError(f"chain {chain} holds two comparable depth-0 factors")
        r = imaginary[0].i if imaginary else 0
        tagged.append((r, chain.without_depth(0)))
    tagged.sort(key=lambda rc: (rc[0], rc[1].key))
    return Factorization(tuple(p for _, p in tagged), tuple(r for r, _ in tagged))


def check_factorization(m: Monomial, w: Weight, fac: Factorization) -> list[str]:
    """Invariant violations of ``fac`` as a factorization of ``m`` for ``w`` (empty if fine)."""
    problems = []
    if len(fac.parts) != w.level or len(fac.assignments) != w.level:
        problems.append(f"expected {w.level} parts")
    union = Counter()
    for p in fac.parts:
        union.update(p.factors)
    if union != m.counts():
        problems.append("parts do not multiply back to the monomial")
    want = Counter(w.slots())
    if Counter(fac.assignments) != want:
        problems.append(f"assignments {fac.assignments} do not match weight {w}")
    for p, r in zip(fac.parts, fac.assignments):
        if not satisfies_dc_oracle(p, 1):
            problems.append(f"part {format_monomial(p)} violates level-1 difference conditions")
        if not satisfies_ic(p, Weight.fundamental(w.ell, r)):
            problems.append(f"part {format_monomial(p)} violates initial conditions for L{r}")
    return problems


@dataclass
class FactorizationReport:
    ell: int
    weight: Weight
    max_degree: int
    checked: int = 0
    factorizable: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "weight": str(self.weight),
            "maxDegree": self.max_degree,
            "checked": self.checked,
            "factorizable": self.factorizable,
            "counterexamples": self.counterexamples,
            "ok": self.ok,
        }


def verify_factorization_theorem(ell: int, w: Weight, max_degree: int) -> FactorizationReport:
    """Every monomial up to ``max_degree``: factorizable iff it satisfies DC and IC.

    The right-hand side is decided by path enumeration, not by ⊏.
    """
    report = FactorizationReport(ell, w, max_degree)
    for degree in range(max_degree + 1):
        for m in monomials_of_degree(ell, degree):
            report.checked += 1
            fac = factorize(m, w)
            expected = satisfies_dc_oracle(m, w.level) and satisfies_ic(m, w)
            if (fac is not None) != expected:
                report.counterexamples.append(
                    {"monomial": format_monomial(m), "problem": f"factorizable={fac is not None}, dc_ic={expected}"}
                )
                continue
            if fac is not None:
                report.factorizable += 1
                for problem in check_factorization(m, w, fac):
                    report.counterexamples.append({"monomial": format_monomial(m), "problem": problem})
    return report
