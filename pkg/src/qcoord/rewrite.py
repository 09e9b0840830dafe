"""Reduction of algebra elements to linear combinations of ordered monomials.

The quantum matrix algebra on generators ``t[i,j]`` carries four families
of commutation relations.  Writing ``x = t[a,b]`` and ``y = t[c,d]``:

* same row (``b < d``):        ``x y = q y x``
* same column (``a < c``):     ``x y = q y x``
* opposite corners (``(a-c)*(b-d) < 0``):  ``x y = y x``
* nested corners (``a < c`` and ``b < d``):
  ``x y = y x + (q - q^-1) t[a,d] t[c,b]``

Any word can be straightened against a fixed generator order by repeatedly
swapping adjacent out-of-order letters.  A swap either keeps the letter
multiset (multiplying by a power of ``q``) or, in the nested-corner case,
also spawns a two-letter replacement of strictly smaller weight; the
measure (weight, inversion count) therefore strictly decreases and the
process terminates.

For the localized and special variants, a second reduction phase expresses
monomials whose diagonal (or antidiagonal) exponents are all positive in
terms of the quantum determinant, enforcing the normal-form constraint that
the minimal diagonal (antidiagonal) exponent be zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .coeff import CycloRing, LaurentPoly, LaurentRing
from .monomial import (
    OPPOSITE_KIND,
    GenIndex,
    GenOrder,
    NormalMonomial,
    Word,
    antidiag_degree,
    check_gen,
    make_opposite_order,
    row_major_order,
    weight_of_exponents,
)

VARIANTS = ("m", "gl", "sl")
FLAVORS = ("standard", "opposite")


@dataclass(frozen=True)
class AlgebraConfig:
    """Fixes the algebra a computation lives in.

    ``variant`` selects the plain matrix algebra (``"m"``), its localization
    at the quantum determinant (``"gl"``) or the quotient by ``D - 1``
    (``"sl"``).  ``flavor`` selects which normal-form constraint applies to
    the localized variants: ``"standard"`` keys on the diagonal exponents,
    ``"opposite"`` on the antidiagonal ones (and requires a block-compatible
    generator order).
    """

    n: int
    variant: str
    order: GenOrder
    ring: LaurentRing | CycloRing
    flavor: str = "standard"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be at least 1")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown basis flavor {self.flavor!r}")
        if self.order.n != self.n:
            raise ValueError("generator order has the wrong dimension")
        if self.flavor == "opposite" and self.order.kind != OPPOSITE_KIND:
            raise ValueError("opposite flavor requires an opposite-constrained order")

    @property
    def ell(self) -> int | None:
        return self.ring.ell if isinstance(self.ring, CycloRing) else None


def make_config(
    n: int,
    variant: str = "m",
    *,
    ell: int | None = None,
    flavor: str = "standard",
    order: GenOrder | None = None,
) -> AlgebraConfig:
    if order is None:
        order = row_major_order(n) if flavor == "standard" else make_opposite_order(n)
    ring = LaurentRing() if ell is None else CycloRing(ell)
    return AlgebraConfig(n, variant, order, ring, flavor)


def swap_adjacent(x: GenIndex, y: GenIndex) -> list[tuple[Word, LaurentPoly]] | None:
    """Expand the two-letter word ``x y`` over words with ``y`` first.

    Returns ``None`` for identical letters (nothing to swap).  The result
    expresses ``x*y`` exactly, so it is valid for either orientation; the
    rewriting engine invokes it when ``x`` ranks after ``y``.
    """
    if x == y:
        return None
    a, b = x
    c, d = y
    if a == c:
        return [((y, x), LaurentPoly.q_power(1 if b < d else -1))]
    if b == d:
        return [((y, x), LaurentPoly.q_power(1 if a < c else -1))]
    if (a - c) * (b - d) < 0:
        return [((y, x), LaurentPoly(1))]
    if a < c:
        return [((y, x), LaurentPoly(1)), (((a, d), (c, b)), LaurentPoly.q_diff())]
    return [((y, x), LaurentPoly(1)), (((c, b), (a, d)), -LaurentPoly.q_diff())]


@lru_cache(maxsize=None)
def _swap_table(n: int):
    """(x, y) -> (q exponent of the swap, optional branch (u, v, sign))."""
    table = {}
    gens = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    for x in gens:
        for y in gens:
            if x == y:
                continue
            a, b = x
            c, d = y
            if a == c:
                table[(x, y)] = ((1 if b < d else -1), None)
            elif b == d:
                table[(x, y)] = ((1 if a < c else -1), None)
            elif (a - c) * (b - d) < 0:
                table[(x, y)] = (0, None)
            elif a < c:
                table[(x, y)] = (0, ((a, d), (c, b), 1))
            else:
                table[(x, y)] = (0, ((c, b), (a, d), -1))
    return table


def _merge(bucket: dict, key, coeff) -> None:
    cur = bucket.get(key)
    if cur is None:
        if coeff:
            bucket[key] = coeff
    else:
        cur = cur + coeff
        if cur:
            bucket[key] = cur
        else:
            del bucket[key]


def _rewrite(cfg: AlgebraConfig, pending: dict, strategy: str = "leftmost", trace=None) -> dict:
    """Straighten a coefficient-weighted set of words.

    ``pending`` maps words to coefficients in ``cfg.ring``; the result maps
    exponent tables of ordered monomials to coefficients.  Words are
    processed one weight class at a time, largest first; within a class the
    chosen adjacent inversion is the leftmost (or rightmost) one.
    """
    n = cfg.n
    ring = cfg.ring
    rank = cfg.order.rank_map
    table = _swap_table(n)
    shift = ring.shift
    qdiff_mul = ring.qdiff_mul
    rightmost = strategy == "rightmost"
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")

    def wt(word):
        counts = [0] * (n * n)
        for i, j in word:
            counts[(i - 1) * n + (j - 1)] += 1
        return (len(word), *counts)

    classes: dict[tuple, dict] = {}
    for word, coeff in pending.items():
        if coeff:
            _merge(classes.setdefault(wt(word), {}), word, coeff)

    result: dict[tuple[int, ...], object] = {}
    while classes:
        top = max(classes)
        bucket = classes.pop(top)
        while bucket:
            word, coeff = bucket.popitem()
            k = len(word)
            pos = -1
            span = range(k - 2, -1, -1) if rightmost else range(k - 1)
            for p in span:
                if rank[word[p]] > rank[word[p + 1]]:
                    pos = p
                    break
            if pos < 0:
                counts = [0] * (n * n)
                for i, j in word:
                    counts[(i - 1) * n + (j - 1)] += 1
                _merge(result, tuple(counts), coeff)
                continue
            x = word[pos]
            y = word[pos + 1]
            qexp, branch = table[(x, y)]
            swapped = word[:pos] + (y, x) + word[pos + 2:]
            _merge(bucket, swapped, shift(coeff, qexp) if qexp else coeff)
            produced = [(swapped, "swap")]
            if branch is not None:
                u, v, sign = branch
                branched = word[:pos] + (u, v) + word[pos + 2:]
                _merge(classes.setdefault(wt(branched), {}), branched, qdiff_mul(coeff, sign))
                produced.append((branched, "branch"))
            if trace is not None:
                trace.append((word, produced))
    return result


def normal_form_of_word(cfg: AlgebraConfig, word: Word, strategy: str = "leftmost", trace=None) -> dict:
    """Exponent-table expansion of a single word (no determinant reduction)."""
    for g in word:
        check_gen(g, cfg.n)
    return _rewrite(cfg, {tuple(word): cfg.ring.one()}, strategy, trace)


# ---------------------------------------------------------------------------
# Determinant-based reduction for the localized / special variants.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _det_word_pairs(n: int) -> tuple[tuple[Word, LaurentPoly], ...]:
    """Words and coefficients of ``sum_s (-q)^len(s) t[1,s(1)] .. t[n,s(n)]``."""
    out = []
    for images in permutations(range(1, n + 1)):
        inv = sum(
            1
            for a in range(n)
            for b in range(a + 1, n)
            if images[a] > images[b]
        )
        word = tuple((row + 1, images[row]) for row in range(n))
        out.append((word, LaurentPoly({inv: (-1) ** inv})))
    return tuple(out)


@lru_cache(maxsize=None)
def _det_terms(cfg: AlgebraConfig) -> dict:
    """Quantum determinant as ordered-monomial exponent tables (no D key)."""
    ring = cfg.ring
    pending = {word: ring.from_laurent(c) for word, c in _det_word_pairs(cfg.n)}
    return _rewrite(cfg, pending)


def _target_positions(cfg: AlgebraConfig) -> tuple[int, ...]:
    n = cfg.n
    if cfg.flavor == "standard":
        return tuple((i - 1) * n + (i - 1) for i in range(1, n + 1))
    return tuple((i - 1) * n + (n - i) for i in range(1, n + 1))


def _pullout_word(cfg: AlgebraConfig) -> Word:
    n = cfg.n
    if cfg.flavor == "standard":
        return tuple((i, i) for i in range(1, n + 1))
    return tuple((i, n + 1 - i) for i in range(n, 0, -1))


def _reduction_measure(cfg: AlgebraConfig, exps: tuple[int, ...]):
    if cfg.flavor == "standard":
        return weight_of_exponents(exps)
    return (antidiag_degree(cfg.n, exps),) + weight_of_exponents(exps)


@lru_cache(maxsize=None)
def _reduction_step(cfg: AlgebraConfig, exps: tuple[int, ...]):
    """Expand a monomial with all target exponents positive.

    Returns entries ``(exps', dshift, coeff)`` with ``dshift`` 1 exactly on
    the term carrying the freed determinant factor.  All emitted monomials
    are strictly smaller than the input in the flavor's reduction measure;
    that descent is what makes iterated enforcement terminate, so it is
    checked here rather than assumed.
    """
    ring = cfg.ring
    order = cfg.order
    targets = _target_positions(cfg)
    if not all(exps[t] >= 1 for t in targets):
        raise ValueError("reduction requires every target exponent to be positive")

    t0 = list(exps)
    for t in targets:
        t0[t] -= 1
    t0 = tuple(t0)
    pull = _pullout_word(cfg)
    pull_exps = [0] * (cfg.n * cfg.n)
    for i, j in pull:
        pull_exps[(i - 1) * cfg.n + (j - 1)] += 1
    pull_exps = tuple(pull_exps)

    straightened = _rewrite(
        cfg, {NormalMonomial(t0).word(order) + pull: ring.one()}
    )
    lead = straightened.pop(exps)
    lead_inv = ring.invert_unit(lead)

    det = _det_terms(cfg)
    pull_coeff = det[pull_exps]
    pull_inv = ring.invert_unit(pull_coeff)

    out: dict[tuple[tuple[int, ...], int], object] = {}
    main = lead_inv * pull_inv
    _merge(out, (t0, 1), main)
    neg_main = -main
    t0_word = NormalMonomial(t0).word(order)
    for det_exps, det_coeff in det.items():
        if det_exps == pull_exps:
            continue
        product = _rewrite(
            cfg, {t0_word + NormalMonomial(det_exps).word(order): neg_main * det_coeff}
        )
        for e2, c2 in product.items():
            _merge(out, (e2, 0), c2)
    neg_lead_inv = -lead_inv
    for e2, c2 in straightened.items():
        _merge(out, (e2, 0), neg_lead_inv * c2)

    # Under the opposite flavor, reordering the traded determinant terms can
    # branch back into the input monomial itself; its net coefficient there
    # is one minus a unit multiple, so it can be solved for and divided out.
    self_coeff = out.pop((exps, 0), None)
    if self_coeff is not None:
        rescale = ring.invert_unit(ring.one() + (-self_coeff))
        out = {key: c * rescale for key, c in out.items()}

    bound = _reduction_measure(cfg, exps)
    for (e2, _dshift), _c in out.items():
        if _reduction_measure(cfg, e2) >= bound:
            raise ArithmeticError(
                "determinant reduction emitted a monomial that does not descend"
            )
    return tuple((e2, dshift, c) for (e2, dshift), c in out.items())


def _violates(exps: tuple[int, ...], targets: tuple[int, ...]) -> bool:
    return all(exps[t] >= 1 for t in targets)


def _enforce(cfg: AlgebraConfig, terms: dict) -> dict:
    """Apply the variant's minimal-exponent-zero constraint to reduced terms."""
    if cfg.variant == "m":
        return terms
    targets = _target_positions(cfg)
    is_gl = cfg.variant == "gl"
    result: dict[NormalMonomial, object] = {}
    classes: dict[tuple, dict] = {}
    for key, coeff in terms.items():
        if _violates(key.exps, targets):
            _merge(classes.setdefault(_reduction_measure(cfg, key.exps), {}), key, coeff)
        else:
            _merge(result, key, coeff)
    while classes:
        top = max(classes)
        bucket = classes.pop(top)
        for key, coeff in bucket.items():
            for e2, dshift, c2 in _reduction_step(cfg, key.exps):
                key2 = NormalMonomial(e2, key.dpower + dshift if is_gl else 0)
                c = coeff * c2
                if _violates(e2, targets):
                    _merge(classes.setdefault(_reduction_measure(cfg, e2), {}), key2, c)
                else:
                    _merge(result, key2, c)
    return result


# ---------------------------------------------------------------------------
# Elements.
# ---------------------------------------------------------------------------


class Element:
    """A finite linear combination of normal monomials, always reduced.

    Construction goes through :meth:`from_words` or :meth:`from_monomials`,
    which straighten and apply the basis constraint; arithmetic keeps the
    result in normal form.
    """

    __slots__ = ("config", "_terms")

    def __init__(self, config: AlgebraConfig, terms: dict | None = None, *, _raw: bool = False):
        self.config = config
        if terms is None:
            terms = {}
        if not _raw:
            terms = _enforce(config, self._validate(config, terms))
        self._terms = terms

    @staticmethod
    def _validate(cfg: AlgebraConfig, terms: dict) -> dict:
        size = cfg.n * cfg.n
        out: dict[NormalMonomial, object] = {}
        for key, coeff in terms.items():
            exps, dpower = key.exps, key.dpower
            if len(exps) != size or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent table {exps}")
            if cfg.variant == "m" and dpower != 0:
                raise ValueError("the plain matrix variant has no determinant inverse")
            if cfg.variant == "sl":
                dpower = 0
            c = cfg.ring.coerce(coeff)
            if c:
                _merge(out, NormalMonomial(tuple(exps), dpower), c)
        return out

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, cfg: AlgebraConfig) -> Element:
        return cls(cfg, {}, _raw=True)

    @classmethod
    def one(cls, cfg: AlgebraConfig) -> Element:
        return cls(cfg, {NormalMonomial((0,) * (cfg.n * cfg.n)): cfg.ring.one()}, _raw=True)

    @classmethod
    def scalar(cls, cfg: AlgebraConfig, value) -> Element:
        c = cfg.ring.coerce(value)
        if not c:
            return cls.zero(cfg)
        return cls(cfg, {NormalMonomial((0,) * (cfg.n * cfg.n)): c}, _raw=True)

    @classmethod
    def generator(cls, cfg: AlgebraConfig, i: int, j: int) -> Element:
        check_gen((i, j), cfg.n)
        exps = [0] * (cfg.n * cfg.n)
        exps[(i - 1) * cfg.n + (j - 1)] = 1
        return cls(cfg, {NormalMonomial(tuple(exps)): cfg.ring.one()}, _raw=True)

    @classmethod
    def d_power(cls, cfg: AlgebraConfig, z: int) -> Element:
        """The central determinant power ``D**z`` (localized variant only)."""
        if cfg.variant == "m":
            raise ValueError("the plain matrix variant has no determinant inverse")
        if cfg.variant == "sl" or z == 0:
            return cls.one(cfg)
        return cls(cfg, {NormalMonomial((0,) * (cfg.n * cfg.n), z): cfg.ring.one()}, _raw=True)

    @classmethod
    def monomial(cls, cfg: AlgebraConfig, m: NormalMonomial, coeff=1) -> Element:
        return cls.from_monomials(cfg, [(m, coeff)])

    @classmethod
    def from_monomials(cls, cfg: AlgebraConfig, pairs) -> Element:
        return cls(cfg, dict(_accumulate(cfg, pairs)))

    @classmethod
    def from_words(cls, cfg: AlgebraConfig, entries, strategy: str = "leftmost") -> Element:
        """Build from ``(word, coeff)`` or ``(word, coeff, dpower)`` entries."""
        groups: dict[int, dict[Word, object]] = {}
        for entry in entries:
            word, coeff = entry[0], entry[1]
            dpower = entry[2] if len(entry) > 2 else 0
            word = tuple(word)
            for g in word:
                check_gen(g, cfg.n)
            if cfg.variant == "m" and dpower != 0:
                raise ValueError("the plain matrix variant has no determinant inverse")
            if cfg.variant == "sl":
                dpower = 0
            _merge(groups.setdefault(dpower, {}), word, cfg.ring.coerce(coeff))
        terms: dict[NormalMonomial, object] = {}
        for dpower, words in groups.items():
            for exps, coeff in _rewrite(cfg, words, strategy).items():
                _merge(terms, NormalMonomial(exps, dpower), coeff)
        return cls(cfg, _enforce(cfg, terms), _raw=True)

    # -- queries -----------------------------------------------------------

    @property
    def terms(self) -> dict:
        """Mapping of normal monomials to coefficients.  Do not mutate."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, m: NormalMonomial):
        return self._terms.get(m, self.config.ring.zero())

    def sorted_terms(self) -> list:
        """Terms sorted canonically: by weight, exponent table, then D power,
        largest first."""
        return sorted(
            self._terms.items(),
            key=lambda kv: (kv[0].weight(), kv[0].exps, kv[0].dpower),
            reverse=True,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.config == other.config and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.config, frozenset(self._terms.items())))

    # -- arithmetic ----------------------------------------------------------

    def _check_config(self, other: Element) -> None:
        if self.config != other.config:
            raise ValueError("elements live in different algebra configurations")

    def __add__(self, other) -> Element:
        if isinstance(other, int):
            other = Element.scalar(self.config, other)
        self._check_config(other)
        merged = dict(self._terms)
        for key, coeff in other._terms.items():
            _merge(merged, key, coeff)
        return Element(self.config, merged, _raw=True)

    __radd__ = __add__

    def __neg__(self) -> Element:
        return Element(
            self.config, {k: -c for k, c in self._terms.items()}, _raw=True
        )

    def __sub__(self, other) -> Element:
        if isinstance(other, int):
            other = Element.scalar(self.config, other)
        return self + (-other)

    def __rsub__(self, other) -> Element:
        return Element.scalar(self.config, other) - self

    def scale(self, value) -> Element:
        c = self.config.ring.coerce(value)
        out: dict[NormalMonomial, object] = {}
        for key, coeff in self._terms.items():
            _merge(out, key, coeff * c)
        return Element(self.config, out, _raw=True)

    def __mul__(self, other) -> Element:
        if isinstance(other, Element):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> Element:
        return self.scale(other)

    def __pow__(self, k: int) -> Element:
        if k < 0:
            raise ValueError("negative element powers are not defined")
        out = Element.one(self.config)
        for _ in range(k):
            out = multiply(out, self)
        return out

    def map_coefficients(self, fn, cfg: AlgebraConfig | None = None) -> Element:
        cfg = cfg or self.config
        out: dict[NormalMonomial, object] = {}
        for key, coeff in self._terms.items():
            c = fn(coeff)
            if c:
                _merge(out, key, c)
        return Element(cfg, out, _raw=True)

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        from .render import element_to_str

        return element_to_str(self)

    def __repr__(self) -> str:
        return f"<Element {self}>"


def _accumulate(cfg: AlgebraConfig, pairs):
    acc: dict[NormalMonomial, object] = {}
    for m, coeff in pairs:
        _merge(acc, m, cfg.ring.coerce(coeff))
    return acc.items()


def normalize(e: Element) -> Element:
    """Re-reduce an element; the identity on anything already in normal form."""
    return Element(e.config, dict(e.terms))


def multiply(a: Element, b: Element) -> Element:
    """Product of two elements, returned in normal form."""
    a._check_config(b)
    cfg = a.config
    order = cfg.order
    entries = []
    for k1, c1 in a.terms.items():
        w1 = k1.word(order)
        for k2, c2 in b.terms.items():
            entries.append((w1 + k2.word(order), c1 * c2, k1.dpower + k2.dpower))
    return Element.from_words(cfg, entries)
