import itertools

from hypothesis import strategies as st

from fst.core import Monomial, Variable, Weight


@st.composite
def variables(draw, ell: int | None = None, max_depth: int = 4, min_depth: int = 1):
    ell = ell or draw(st.integers(1, 3))
    i = draw(st.integers(1, ell))
    j = draw(st.integers(i, ell))
    return Variable(i, j, draw(st.integers(min_depth, max_depth)))


@st.composite
def monomials(draw, ell: int | None = None, max_len: int = 6, max_depth: int = 4):
    ell = ell or draw(st.integers(1, 3))
    vs = draw(st.lists(variables(ell, max_depth), max_size=max_len))
    return Monomial.of(vs)


@st.composite
def weights(draw, ell: int, max_level: int = 3):
    coeffs = draw(st.lists(st.integers(0, max_level), min_size=ell + 1, max_size=ell + 1))
    if sum(coeffs) == 0:
        coeffs[draw(st.integers(0, ell))] = 1
    while sum(coeffs) > max_level:
        coeffs[coeffs.index(max(coeffs))] -= 1
    return Weight(tuple(coeffs))


def x(i, j, n):
    return Variable(i, j, n)


def quadratic_shapes(ell):
    """The quadratic level-1 relations: (pattern, indices, terms), leading monomial first."""
    out = []
    r = range(1, ell + 1)
    for i in r:
        out.append(("iiii", (i, i, i, i), [(x(i, i, 1), x(i, i, 1))]))
    for i, j in itertools.combinations(r, 2):
        out.append(("iiij", (i, i, i, j), [(x(i, j, 1), x(i, i, 1))]))
        out.append(("ijjj", (i, j, j, j), [(x(j, j, 1), x(i, j, 1))]))
        out.append(("iijj", (i, i, j, j), [(x(i, j, 1), x(i, j, 1)), (x(i, i, 1), x(j, j, 1))]))
    for i, j, k in itertools.combinations(r, 3):
        out.append(("iijk", (i, i, j, k), [(x(i, k, 1), x(i, j, 1)), (x(j, k, 1), x(i, i, 1))]))
        out.append(("ijjk", (i, j, j, k), [(x(j, j, 1), x(i, k, 1)), (x(j, k, 1), x(i, j, 1))]))
        out.append(("ijkk", (i, j, k, k), [(x(j, k, 1), x(i, k, 1)), (x(k, k, 1), x(i, j, 1))]))
    for i, j, k, l in itertools.combinations(r, 4):
        out.append(
            ("ijkl", (i, j, k, l), [(x(j, k, 1), x(i, l, 1)), (x(j, l, 1), x(i, k, 1)), (x(k, l, 1), x(i, j, 1))])
        )
    return out
