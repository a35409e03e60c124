import itertools
from fractions import Fraction

import pytest

from fst.basis import graded_series
from fst.core import Monomial, Variable, Weight, colors, monomials_of_degree, parse_weight
from fst.linalg import PRIME_FIELD, RATIONAL
from fst.model import (
    CutoffExceeded,
    act,
    build_level1_model,
    highest_weight_vector,
    normal_form,
    tensor_apply,
    verify_independence,
)


def x(i, j, n):
    return Variable(i, j, n)


def mono(*vs):
    return Monomial.of(vs)


@pytest.fixture(scope="module")
def rational_models():
    return {(ell, r): build_level1_model(ell, r, 5, "rational") for ell in (1, 2) for r in range(ell + 1)}


def test_dims_match_counts(rational_models):
    for (ell, r), mdl in rational_models.items():
        assert mdl.dims == list(graded_series(ell, Weight.fundamental(ell, r), 5).coeffs)
        assert mdl.weight == Weight.fundamental(ell, r)


def test_known_dims():
    assert build_level1_model(2, 0, 6).dims == [1, 3, 4, 7, 13, 19, 29]
    assert build_level1_model(3, 1, 6).dims == [1, 5, 9, 22, 45, 81, 145]


def test_normal_form_example(rational_models):
    mdl = rational_models[(2, 0)]
    nf = normal_form(mdl, mono(x(1, 2, 1), x(1, 2, 1)))
    assert set(nf) == {mono(x(1, 1, 1), x(2, 2, 1))}
    assert nf[mono(x(1, 1, 1), x(2, 2, 1))] == Fraction(-1, 2)


def test_normal_form_of_basis_is_unit(rational_models):
    for mdl in rational_models.values():
        for n in range(6):
            for b in mdl.basis(n):
                assert normal_form(mdl, b) == {b: 1}


def test_initial_generators_vanish(rational_models):
    for (ell, r), mdl in rational_models.items():
        for c in colors(ell):
            nf = normal_form(mdl, mono(x(c.i, c.j, 1)))
            assert (nf == {}) == (c.j <= r)


def test_rewrite_points_upward(rational_models):
    for mdl in rational_models.values():
        for n in range(6):
            basis = set(mdl.basis(n))
            for m in monomials_of_degree(mdl.ell, n):
                if m in basis:
                    continue
                assert all(m < b for b in normal_form(mdl, m))


def test_action_is_commutative_and_consistent(rational_models):
    # multiplying one factor at a time in any order reproduces the normal form
    mdl = rational_models[(2, 1)]
    for n in range(1, 6):
        for m in monomials_of_degree(2, n):
            want = normal_form(mdl, m)
            for order in set(itertools.permutations(m.factors)):
                vec = {Monomial(): Fraction(1)}
                for v in order:
                    vec = act(mdl, v, vec)
                assert vec == want


def test_prime_mode_matches_rational():
    rat = build_level1_model(2, 2, 5, "rational")
    pri = build_level1_model(2, 2, 5, "prime")
    assert rat.dims == pri.dims
    for n in range(6):
        for m in monomials_of_degree(2, n):
            a = normal_form(rat, m)
            b = normal_form(pri, m)
            assert {k: PRIME_FIELD(v) for k, v in a.items()} == b


def test_cutoff_and_argument_checks(rational_models):
    with pytest.raises(CutoffExceeded):
        normal_form(rational_models[(1, 0)], mono(x(1, 1, 6)))
    with pytest.raises(ValueError):
        build_level1_model(2, 3, 2)
    with pytest.raises(ValueError):
        build_level1_model(2, 0, 2, mode="float")
    with pytest.raises(ValueError):
        normal_form(rational_models[(1, 0)], mono(x(1, 1, 0)))


def test_parallel_build_matches_serial():
    a = build_level1_model(2, 1, 5, "rational")
    b = build_level1_model(2, 1, 5, "rational", jobs=2)
    assert a.dims == b.dims
    assert a.blocks == b.blocks


def test_tensor_example():
    w = Weight.fundamental(1, 0, 2)
    models = {0: build_level1_model(1, 0, 2, "rational")}
    v = highest_weight_vector(w, RATIONAL)
    e = Monomial()
    a = tensor_apply(models, mono(x(1, 1, 2)), v)
    b = tensor_apply(models, mono(x(1, 1, 1), x(1, 1, 1)), v)
    assert a.coords == {(mono(x(1, 1, 2)), e): 1, (e, mono(x(1, 1, 2))): 1}
    assert b.coords == {(mono(x(1, 1, 1)), mono(x(1, 1, 1))): 2}
    assert a.degree == b.degree == 2


@pytest.mark.parametrize("ell, w, top", [(1, "2,0", 6), (1, "1,1", 6), (2, "1,1,0", 4), (2, "0,0,2", 4)])
def test_independence_small(ell, w, top):
    rep = verify_independence(ell, parse_weight(w), top, "rational", strict=True)
    assert rep.ok
    assert [d["count"] for d in rep.degrees] == list(graded_series(ell, parse_weight(w), top).coeffs)
    doc = rep.to_json()
    assert doc["mode"] == "rational" and doc["weight"] == w
    assert set(doc["degrees"][0]) == {"N", "count", "rankBasis", "rankAll", "ok"}


def test_independence_needs_enough_cutoff():
    w = parse_weight("2,0")
    with pytest.raises(CutoffExceeded):
        verify_independence(1, w, 4, models={0: build_level1_model(1, 0, 3)})
    with pytest.raises(ValueError):
        verify_independence(2, w, 2)
