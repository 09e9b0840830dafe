"""Words, ordered monomials, generator orders and the weight filtration.

The generators of the quantum matrix algebra are indexed by pairs
``(i, j)`` with ``1 <= i, j <= n``.  A *word* is a finite product of
generators written as a tuple of index pairs.  A *normal monomial* is an
ordered product ``prod t[i,j]**N[i,j] * D**z`` whose factors follow a fixed
total order on the index pairs; the exponent table is stored row-major.

The *weight* of a word is the vector ``(degree, d[1,1], d[1,2], ...,
d[n,n])`` of its length followed by the occurrence counts of each
generator in row-major order.  Compared lexicographically, weights never
increase under the rewriting relations, which is what makes the reduction
to normal form terminate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Iterable, NamedTuple

GenIndex = tuple[int, int]
Word = tuple[GenIndex, ...]
Weight = tuple[int, ...]

STANDARD_KIND = "standard-any"
OPPOSITE_KIND = "opposite-constrained"


def check_gen(g: GenIndex, n: int) -> None:
    i, j = g
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"generator index {g} out of range for n={n}")


def weight(word: Word, n: int) -> Weight:
    """Weight of a word: total degree, then row-major occurrence counts."""
    counts = [0] * (n * n)
    for i, j in word:
        check_gen((i, j), n)
        counts[(i - 1) * n + (j - 1)] += 1
    return (len(word), *counts)


def weight_of_exponents(exps: tuple[int, ...]) -> Weight:
    """Weight of the ordered monomial with the given exponent table."""
    return (sum(exps), *exps)


def lex_compare(a: Weight, b: Weight) -> int:
    """Lexicographic comparison; returns -1, 0 or 1."""
    if len(a) != len(b):
        raise ValueError(f"weights of different dimension: {len(a)} vs {len(b)}")
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def antidiag_region(n: int, g: GenIndex) -> int:
    """Position of a generator relative to the antidiagonal.

    Returns -1 for the region above it (``j > n+1-i``), 0 on it, +1 below
    (``j < n+1-i``).  The opposite-order constraint ranks the three regions
    in this sequence.
    """
    i, j = g
    d = i + j - (n + 1)
    return -1 if d > 0 else (0 if d == 0 else 1)


def antidiag_degree(n: int, exps: tuple[int, ...]) -> int:
    """Total exponent carried by the antidiagonal generators."""
    return sum(exps[(i - 1) * n + (n - i)] for i in range(1, n + 1))


@dataclass(frozen=True)
class GenOrder:
    """A total order on the generator indices.

    ``seq`` lists all ``n*n`` index pairs from smallest to largest rank.
    ``kind`` is ``"standard-any"`` for a free choice of order, or
    ``"opposite-constrained"`` when the order must list every generator
    above the antidiagonal before every antidiagonal one, which in turn
    precede all those below it.
    """

    n: int
    seq: tuple[GenIndex, ...]
    kind: str = STANDARD_KIND
    _rank: dict = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self):
        n = self.n
        if sorted(self.seq) != [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]:
            raise ValueError("order must list every generator index exactly once")
        if self.kind not in (STANDARD_KIND, OPPOSITE_KIND):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == OPPOSITE_KIND:
            regions = [antidiag_region(n, g) for g in self.seq]
            if regions != sorted(regions):
                raise ValueError(
                    "opposite-constrained order must rank the upper antidiagonal "
                    "block first, then the antidiagonal, then the lower block"
                )
        object.__setattr__(self, "_rank", {g: r for r, g in enumerate(self.seq)})

    def rank(self, g: GenIndex) -> int:
        return self._rank[g]

    @property
    def rank_map(self) -> dict[GenIndex, int]:
        return self._rank


def row_major_order(n: int) -> GenOrder:
    """The default order: ``(1,1) < (1,2) < ... < (n,n)``."""
    seq = tuple((i, j) for i in range(1, n + 1) for j in range(1, n + 1))
    return GenOrder(n, seq, STANDARD_KIND)


def make_opposite_order(n: int, within_block=None) -> GenOrder:
    """Build an order satisfying the antidiagonal block constraint.

    ``within_block`` optionally gives a sort key applied inside each of the
    three regions; the default is row-major.
    """
    if within_block is None:
        within_block = lambda g: g
    gens = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    gens.sort(key=lambda g: (antidiag_region(n, g), within_block(g)))
    return GenOrder(n, tuple(gens), OPPOSITE_KIND)


class NormalMonomial(NamedTuple):
    """An ordered monomial ``prod t[i,j]**exps[i,j] * D**dpower``.

    ``exps`` is row-major of length ``n*n``; ``dpower`` is the exponent of
    the (central) quantum determinant and stays 0 outside the localized
    variant.
    """

    exps: tuple[int, ...]
    dpower: int = 0

    @property
    def n(self) -> int:
        return isqrt(len(self.exps))

    def degree(self) -> int:
        return sum(self.exps)

    def weight(self) -> Weight:
        return (sum(self.exps), *self.exps)

    def word(self, order: GenOrder) -> Word:
        """Expand into a word with factors listed in rank order."""
        n = order.n
        letters: list[GenIndex] = []
        for g in order.seq:
            e = self.exps[(g[0] - 1) * n + (g[1] - 1)]
            letters.extend([g] * e)
        return tuple(letters)

    def min_diag(self) -> int:
        n = self.n
        return min(self.exps[(i - 1) * n + (i - 1)] for i in range(1, n + 1))

    def min_antidiag(self) -> int:
        n = self.n
        return min(self.exps[(i - 1) * n + (n - i)] for i in range(1, n + 1))


def one_monomial(n: int) -> NormalMonomial:
    return NormalMonomial((0,) * (n * n), 0)


def generator_monomial(n: int, i: int, j: int) -> NormalMonomial:
    check_gen((i, j), n)
    exps = [0] * (n * n)
    exps[(i - 1) * n + (j - 1)] = 1
    return NormalMonomial(tuple(exps), 0)


def monomial_from_exponents(n: int, table: dict[GenIndex, int], dpower: int = 0) -> NormalMonomial:
    exps = [0] * (n * n)
    for g, e in table.items():
        check_gen(g, n)
        if e < 0:
            raise ValueError("generator exponents must be nonnegative")
        exps[(g[0] - 1) * n + (g[1] - 1)] = e
    return NormalMonomial(tuple(exps), dpower)


def word_of_exponents(exps: tuple[int, ...], order: GenOrder) -> Word:
    return NormalMonomial(exps, 0).word(order)


def concat(*words: Iterable[Word]) -> Word:
    out: tuple[GenIndex, ...] = ()
    for w in words:
        out = out + tuple(w)
    return out
