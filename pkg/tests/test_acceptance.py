"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line.  Run this file directly
(``python tests/test_acceptance.py``) to get just those lines.
"""

import itertools
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fst.basis import graded_series, iter_basis  # noqa: E402
from fst.conditions import antichain_widths, max_path_loads, satisfies_dc, satisfies_dc_oracle  # noqa: E402
from fst.core import (  # noqa: E402
    Monomial,
    Variable,
    Weight,
    colors,
    compare_monomials,
    compare_variables,
    monomials_of_degree,
    precedes,
    precedes_by_definition,
)
from fst.decompose import chain_cover, verify_factorization_theorem  # noqa: E402
from fst.model import DimensionMismatch, build_level1_model, normal_form, verify_independence  # noqa: E402
from fst.relations import graded_relations, leading_term, verify_leading_terms  # noqa: E402

from support import quadratic_shapes  # noqa: E402

TITLES = {
    1: "order/poset suite",
    2: "DC equivalence",
    3: "leading-term theorem",
    4: "factorization theorem",
    5: "Rogers-Ramanujan anchor",
    6: "quotient dimensions",
    7: "independence at higher level",
    8: "rewriting direction",
}


# filled by test_criterion; tests/conftest.py repeats these in the terminal summary
RESULT_LINES: list[str] = []


def report(number: int, ok: bool, detail: str, started: float, terminal=None) -> None:
    line = f"[acceptance] {number}. {TITLES[number]}: {'PASS' if ok else 'FAIL'} ({detail}; {time.time() - started:.1f}s)"
    RESULT_LINES.append(line)
    if terminal is None:
        print(line, flush=True)
    else:
        terminal.write_line("")
        terminal.write_line(line)


def variables(ell, max_depth):
    return [Variable(c.i, c.j, n) for n in range(1, max_depth + 1) for c in colors(ell)]


def weights_up_to(ell, max_level):
    for coeffs in itertools.product(range(max_level + 1), repeat=ell + 1):
        if 1 <= sum(coeffs) <= max_level:
            yield Weight(coeffs)


def criterion_1():
    problems = []
    checked = 0
    for ell in (1, 2, 3):
        vs = variables(ell, 4)
        for a, b in itertools.product(vs, repeat=2):
            checked += 1
            cab, cba = compare_variables(a, b), compare_variables(b, a)
            if cab != -cba or (cab == 0) != (a == b):
                problems.append(f"variable order not antisymmetric/total at {a!r}, {b!r}")
            p = precedes(a, b)
            if p != precedes_by_definition(a, b):
                problems.append(f"precedes disagrees with its definition at {a!r}, {b!r}")
            if p and precedes(b, a):
                problems.append(f"⊏ not asymmetric at {a!r}, {b!r}")
            if p != (cab == -1 and satisfies_dc_oracle(Monomial.of([a, b]), 1)):
                problems.append(f"⊏ differs from (a<b and pair DC) at {a!r}, {b!r}")
        for a, b, c in itertools.product(vs, repeat=3):
            if compare_variables(a, b) < 0 and compare_variables(b, c) < 0 and compare_variables(a, c) >= 0:
                problems.append(f"variable order not transitive at {a!r}, {b!r}, {c!r}")
            if precedes(a, b) and precedes(b, c) and not precedes(a, c):
                problems.append(f"⊏ not transitive at {a!r}, {b!r}, {c!r}")
        for a in vs:
            if precedes(a, a):
                problems.append(f"⊏ not irreflexive at {a!r}")
        # monomials of up to two factors: totality, antisymmetry, transitivity via a
        # sorted chain, and multiplicativity by every single variable
        ms = [Monomial.of(c) for r in range(3) for c in itertools.combinations_with_replacement(vs, r)]
        ordered = sorted(ms, key=lambda m: m.key)
        for a, b in zip(ordered, ordered[1:]):
            if compare_monomials(a, b) != -1 or compare_monomials(b, a) != 1:
                problems.append(f"monomial order breaks the sorted chain at {a}, {b}")
        for a, b in itertools.product(ms, repeat=2):
            checked += 1
            cab = compare_monomials(a, b)
            if cab != -compare_monomials(b, a) or (cab == 0) != (a == b):
                problems.append(f"monomial order not antisymmetric/total at {a}, {b}")
            if cab == -1:
                for v in vs:
                    if compare_monomials(a * v, b * v) != -1:
                        problems.append(f"monomial order not multiplicative at {a}, {b}, {v!r}")
    return not problems, f"{checked} pairs, {len(problems)} violations"


def criterion_2():
    disagreements = 0
    total = 0
    for ell in (1, 2, 3):
        vs = variables(ell, 4)
        ms = [Monomial.of(c) for r in range(7) for c in itertools.combinations_with_replacement(vs, r)]
        widths = antichain_widths(ms)
        loads = max_path_loads(ms, ell)
        for m, width, load in zip(ms, widths, loads):
            for k in (1, 2, 3):
                by_matching = satisfies_dc(m, k).satisfied
                by_paths = bool(load <= k)
                by_cover = chain_cover(m, k) is not None
                by_kernel = bool(width <= k)
                if not by_matching == by_paths == by_cover == by_kernel:
                    disagreements += 1
        # the batched path oracle against the per-monomial one on a fixed sample
        sample = ms[:: max(1, len(ms) // 2000)]
        for m, load in zip(sample, max_path_loads(sample, ell)):
            for k in (1, 2, 3):
                if satisfies_dc_oracle(m, k) != bool(load <= k):
                    disagreements += 1
        total += len(ms)
    return disagreements == 0, f"{total} monomials x k=1..3, {disagreements} disagreements"


def criterion_3():
    mismatches = 0
    checked = 0
    for ell in (1, 2, 3):
        for k in (1, 2):
            rep = verify_leading_terms(ell, k, 6)
            mismatches += len(rep.mismatches)
            checked += rep.checked
    # the quadratic relations: at l=2 the four patterns on two indices exist;
    # all eight patterns need four distinct indices, so l=4 is checked as well
    kinds = {}
    for ell in (2, 4):
        rels = {r.key: r for r in graded_relations(ell, 1, 2)}
        shapes = quadratic_shapes(ell)
        kinds[ell] = len({kind for kind, _, _ in shapes})
        if len(shapes) != len(rels):
            mismatches += 1
        for _, idx, terms in shapes:
            checked += 1
            rel = rels.get(tuple(idx.count(t) for t in range(1, ell + 1)))
            support = {Monomial.of(t) for t in terms}
            if (
                rel is None
                or set(rel.terms) != support
                or any(c == 0 for c in rel.terms.values())
                or leading_term(rel) != Monomial.of(terms[0])
            ):
                mismatches += 1
    ok = mismatches == 0 and kinds == {2: 4, 4: 8}
    return ok, f"{checked} relations, {mismatches} mismatches, quadratic patterns l=2: {kinds[2]}, l=4: {kinds[4]}"


def criterion_4():
    bad = 0
    checked = 0
    weights = 0
    for ell in (1, 2):
        for w in weights_up_to(ell, 3):
            rep = verify_factorization_theorem(ell, w, 5)
            bad += len(rep.counterexamples)
            checked += rep.checked
            weights += 1
    return bad == 0, f"{weights} weights, {checked} monomials, {bad} counterexamples"


def partitions(n, max_part=None):
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in partitions(n - p, p):
            yield (p,) + rest


def criterion_5():
    def count(n, smallest):
        return sum(
            1 for p in partitions(n) if all(a - b >= 2 for a, b in zip(p, p[1:])) and (not p or p[-1] >= smallest)
        )

    s0 = graded_series(1, Weight.fundamental(1, 0), 20)
    s1 = graded_series(1, Weight.fundamental(1, 1), 20)
    ok0 = list(s0.coeffs) == [count(n, 1) for n in range(21)]
    ok1 = list(s1.coeffs) == [count(n, 2) for n in range(21)]
    return ok0 and ok1, f"L0: {'match' if ok0 else 'differ'}, L1: {'match' if ok1 else 'differ'} through q^20"


def criterion_6():
    runs = [(1, 6, "rational"), (2, 6, "rational"), (3, 5, "rational"), (3, 6, "prime")]
    failures = []
    for ell, cutoff, mode in runs:
        for r in range(ell + 1):
            try:
                build_level1_model(ell, r, cutoff, mode)
            except DimensionMismatch as exc:
                failures.append(f"l={ell} r={r}: {exc}")
    return not failures, f"{sum(ell + 1 for ell, _, _ in runs)} models, {len(failures)} mismatches"


INDEPENDENCE_CASES = [
    (1, (2, 0), 8),
    (1, (1, 1), 8),
    (1, (0, 2), 8),
    (1, (3, 0), 8),
    (2, (2, 0, 0), 5),
    (2, (1, 1, 0), 5),
    (2, (1, 0, 1), 5),
    (2, (0, 1, 1), 5),
    (2, (0, 0, 2), 5),
]


def criterion_7():
    failures = []
    for mode in ("prime", "rational"):
        for ell, coeffs, top in INDEPENDENCE_CASES:
            rep = verify_independence(ell, Weight(coeffs), top, mode)
            failures += [(mode, coeffs, d["N"]) for d in rep.degrees if not d["ok"]]
    n = len(INDEPENDENCE_CASES)
    return not failures, f"{n} weights in prime and rational mode, {len(failures)} failing degrees"


def criterion_8():
    violations = 0
    checked = 0
    for ell in (1, 2):
        for r in range(ell + 1):
            model = build_level1_model(ell, r, 5, "rational")
            w = Weight.fundamental(ell, r)
            for n in range(6):
                basis = set(iter_basis(ell, w, n))
                for m in monomials_of_degree(ell, n):
                    if m in basis:
                        continue
                    checked += 1
                    if any(compare_monomials(b, m) != 1 for b in normal_form(model, m)):
                        violations += 1
    return violations == 0, f"{checked} non-basis monomials, {violations} violations"


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, pytestconfig):
    started = time.time()
    ok, detail = CRITERIA[number]()
    report(number, ok, detail, started, pytestconfig.pluginmanager.get_plugin("terminalreporter"))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for number, fn in CRITERIA.items():
        started = time.time()
        ok, detail = fn()
        report(number, ok, detail, started)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
