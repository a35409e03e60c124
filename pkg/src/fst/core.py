"""Colors, variables, monomials and weights for the type C_l grading.

A color ``(i, j)`` with ``1 <= i <= j <= l`` stands for the root e_i + e_j.
A variable is a color together with a depth ``n``; it represents the loop
element ``x_ij(-n)``.  Monomials are commutative, so they are stored as sorted
tuples of variables.  Storage is ascending in the variable order, so the
rightmost factor is the greatest one, as in the usual written convention.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import total_ordering
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Color",
    "Variable",
    "Monomial",
    "Weight",
    "MonomialSyntaxError",
    "IndexRangeError",
    "colors",
    "compare_colors",
    "compare_variables",
    "compare_monomials",
    "precedes",
    "precedes_by_definition",
    "parse_monomial",
    "format_monomial",
    "parse_weight",
    "format_weight",
    "monomials_of_degree",
    "color_weight",
]


class MonomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class IndexRangeError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Color:
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i <= self.j:
            raise IndexRangeError(f"invalid color ({self.i},{self.j}): need 1 <= i <= j")

    @property
    def key(self) -> tuple[int, int]:
        # larger key == greater color; (11) is the maximum
        return (-self.i, -self.j)

    def __repr__(self) -> str:
        return f"({self.i}{self.j})" if self.j < 10 else f"({self.i},{self.j})"


def colors(ell: int) -> list[Color]:
    """All colors for rank ``ell`` in increasing color order."""
    out = [Color(i, j) for i in range(1, ell + 1) for j in range(i, ell + 1)]
    out.sort(key=lambda c: c.key)
    return out


@total_ordering
@dataclass(frozen=True, slots=True, eq=True)
class Variable:
    i: int
    j: int
    depth: int

    def __post_init__(self):
        if not 1 <= self.i <= self.j:
            raise IndexRangeError(f"invalid color ({self.i},{self.j}): need 1 <= i <= j")
        if self.depth < 0:
            raise ValueError(f"negative depth {self.depth}")

    @property
    def color(self) -> Color:
        return Color(self.i, self.j)

    @property
    def key(self) -> tuple[int, int, int]:
        return (-self.depth, -self.i, -self.j)

    def __lt__(self, other: Variable) -> bool:
        return self.key < other.key

    def __repr__(self) -> str:
        return format_monomial(Monomial((self,)))


def compare_colors(a: Color, b: Color) -> int:
    """-1, 0 or 1 as ``a`` is below, equal to or above ``b``.

    ``(i', j') < (i, j)`` iff ``i' > i``, or ``i' == i`` and ``j' > j``.
    """
    if a.i != b.i:
        return -1 if a.i > b.i else 1
    if a.j != b.j:
        return -1 if a.j > b.j else 1
    return 0


def compare_variables(a: Variable, b: Variable) -> int:
    # degree of x(-n) is -n, so deeper variables are smaller
    if a.depth != b.depth:
        return -1 if a.depth > b.depth else 1
    return compare_colors(a.color, b.color)


@total_ordering
@dataclass(frozen=True, slots=True)
class Monomial:
    """A finite multiset of variables, stored ascending.

    Build through :meth:`of` (or ``*``) to get canonical storage; the raw
    constructor trusts its argument.
    """

    factors: tuple[Variable, ...] = ()

    @classmethod
    def of(cls, factors: Iterable[Variable]) -> Monomial:
        return cls(tuple(sorted(factors, key=_var_key)))

    @classmethod
    def from_counts(cls, counts: dict[Variable, int]) -> Monomial:
        return cls.of(v for v, e in counts.items() for _ in range(e))

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self) -> Iterator[Variable]:
        return iter(self.factors)

    def __mul__(self, other: Monomial | Variable) -> Monomial:
        if isinstance(other, Variable):
            return Monomial.of(self.factors + (other,))
        return Monomial.of(self.factors + other.factors)

    __rmul__ = __mul__

    @property
    def degree(self) -> int:
        """Sum of depths; the monomial has degree ``-self.degree``."""
        return sum(v.depth for v in self.factors)

    @property
    def key(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(v.key for v in reversed(self.factors))

    def counts(self) -> Counter:
        return Counter(self.factors)

    def at_depth(self, n: int) -> Counter:
        """Exponents of the colors of depth-``n`` factors."""
        return Counter(v.color for v in self.factors if v.depth == n)

    def without_depth(self, n: int) -> Monomial:
        return Monomial(tuple(v for v in self.factors if v.depth != n))

    def is_canonical(self) -> bool:
        return all(not b < a for a, b in zip(self.factors, self.factors[1:]))

    def __lt__(self, other: Monomial) -> bool:
        return compare_monomials(self, other) < 0

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r})"

    def __str__(self) -> str:
        return format_monomial(self) or "1"


def _var_key(v: Variable) -> tuple[int, int, int]:
    return (-v.depth, -v.i, -v.j)


def compare_monomials(a: Monomial, b: Monomial) -> int:
    """Lexicographic comparison from the greatest factor downwards.

    When one monomial runs out while all compared factors agree, it has
    fewer copies of the next greatest variable and is the smaller one; the
    empty monomial is the minimum.  This keeps the order compatible with
    multiplication for monomials of any length.
    """
    fa, fb = a.factors, b.factors
    ia, ib = len(fa) - 1, len(fb) - 1
    while ia >= 0 and ib >= 0:
        c = compare_variables(fa[ia], fb[ib])
        if c:
            return c
        ia -= 1
        ib -= 1
    if ia < 0 and ib < 0:
        return 0
    return -1 if ia < 0 else 1


def precedes(a: Variable, b: Variable) -> bool:
    """The strict partial order ``a ⊏ b`` on variables.

    True iff ``a`` is at least two levels deeper than ``b``, or exactly one
    level deeper with ``a.j > b.i``, or at the same depth with both indices
    strictly larger.
    """
    d = a.depth - b.depth
    if d >= 2:
        return True
    if d == 1:
        return a.j > b.i
    if d == 0:
        return a.i > b.i and a.j > b.j
    return False


def precedes_by_definition(a: Variable, b: Variable) -> bool:
    """``a < b`` and the two-factor monomial ``ab`` has no level-1 leading term.

    Spelled out from the path conditions directly (no use of :func:`precedes`):
    two variables clash at level 1 iff they are equal, nested at the same
    depth, or one level apart with the deeper column at most the shallower row.
    """
    if not a < b:
        return False
    if a.depth == b.depth:
        nested = (a.i <= b.i <= b.j <= a.j) or (b.i <= a.i <= a.j <= b.j)
        return not nested
    if a.depth == b.depth + 1:
        return not a.j <= b.i
    return True


@dataclass(frozen=True)
class Weight:
    """Dominant integral weight ``k0*L0 + ... + kl*Ll``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise ValueError("weight needs at least two coefficients (k0, k1)")
        if any(c < 0 for c in self.coeffs):
            raise ValueError(f"negative coefficient in weight {self.coeffs}")

    @classmethod
    def fundamental(cls, ell: int, r: int, mult: int = 1) -> Weight:
        c = [0] * (ell + 1)
        c[r] = mult
        return cls(tuple(c))

    @property
    def ell(self) -> int:
        return len(self.coeffs) - 1

    @property
    def level(self) -> int:
        return sum(self.coeffs)

    def slots(self) -> list[int]:
        """Fundamental indices of the level-1 tensor factors, ascending."""
        return [r for r, c in enumerate(self.coeffs) for _ in range(c)]

    def __add__(self, other: Weight) -> Weight:
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    def __str__(self) -> str:
        return format_weight(self)


def parse_weight(text: str, ell: int | None = None) -> Weight:
    try:
        coeffs = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"malformed weight {text!r}; expected k0,k1,...,kl") from None
    w = Weight(coeffs)
    if ell is not None and w.ell != ell:
        raise ValueError(f"weight {text!r} has {len(coeffs)} entries, rank {ell} needs {ell + 1}")
    return w


def format_weight(w: Weight) -> str:
    return ",".join(str(c) for c in w.coeffs)


_TERM = re.compile(r"x\[(\d+),(\d+)\]\(-(\d+)\)")


def parse_monomial(text: str, ell: int | None = None) -> Monomial:
    """Parse ``x[i,j](-n)*x[i,j](-n)*...``; the empty string is the identity."""
    if text == "":
        return Monomial()
    factors = []
    pos = 0
    while True:
        m = _TERM.match(text, pos)
        if m is None:
            raise MonomialSyntaxError("expected term x[i,j](-n)", pos)
        i, j, n = (int(g) for g in m.groups())
        if not 1 <= i <= j:
            raise IndexRangeError(f"invalid color ({i},{j}) at position {pos}: need 1 <= i <= j")
        if ell is not None and j > ell:
            raise IndexRangeError(f"index {j} at position {pos} exceeds rank {ell}")
        factors.append(Variable(i, j, n))
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "*":
            raise MonomialSyntaxError("expected '*'", pos)
        pos += 1
    return Monomial.of(factors)


def format_monomial(m: Monomial) -> str:
    return "*".join(f"x[{v.i},{v.j}](-{v.depth})" for v in m.factors)


def color_weight(m: Monomial | Iterable[Variable], ell: int) -> tuple[int, ...]:
    """Multiplicity of each index 1..ell among rows and columns of all factors."""
    w = [0] * ell
    for v in m:
        w[v.i - 1] += 1
        w[v.j - 1] += 1
    return tuple(w)


def _partitions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - p, p):
            yield (p,) + rest


def monomials_of_degree(ell: int, degree: int) -> Iterator[Monomial]:
    """Every monomial with depths >= 1 and total depth ``degree`` (unordered)."""
    cols = colors(ell)
    for part in _partitions(degree, degree):
        groups = Counter(part)
        yield from _color_assignments(sorted(groups.items()), cols)


def _color_assignments(groups: Sequence[tuple[int, int]], cols: list[Color]) -> Iterator[Monomial]:
    if not groups:
        yield Monomial()
        return
    (depth, mult), rest = groups[0], groups[1:]
    for choice in combinations_with_replacement(cols, mult):
        head = [Variable(c.i, c.j, depth) for c in choice]
        for tail in _color_assignments(rest, cols):
            yield Monomial.of(head + list(tail.factors))
