"""The Frobenius-extension pairing at a root of unity.

Over the embedded classical coordinate ring, the specialized algebra is a
free module on the residue monomials.  The functional ``phi`` projects onto
the top residue monomial (every exponent equal to ``l - 1``); the pairing
``B(x, y) = phi(x y)`` is then associative and non-degenerate, with an
explicit dual witness for every basis monomial.  Its twist -- the
automorphism ``nu`` with ``B(x, y) = B(nu(y), x)`` -- rescales each
generator by a fixed power of the root of unity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ._concurrency import map_cases
from .coeff import CycloElem, CycloRing
from .monomial import GenOrder, NormalMonomial, row_major_order
from .render import monomial_to_str
from .report import CheckReport
from .rewrite import AlgebraConfig, Element, make_config, multiply
from .rootspec import (
    ClassicalMonomial,
    ClassicalPoly,
    enumerate_basis,
    module_expand,
)


def nakayama_exponent(n: int, i: int, j: int) -> int:
    """Exponent of the root of unity in ``nu(t[i,j])``.

    ``nu(t[i,j]) = eps**(2*(n+1-i-j)) * t[i,j]``.  The sign of the exponent
    is pinned by the commutation relations: straightening ``m * t[i,j]``
    against ``t[i,j] * m`` for the top-complement monomials produces
    exactly this ratio of unit coefficients, and only this choice satisfies
    ``B(x, y) = B(nu(y), x)`` (see the nakayama suite).
    """
    return 2 * (n + 1 - i - j)


@dataclass(frozen=True)
class Witness:
    """Non-degeneracy data: ``phi(x * a) == unit * coeff`` exactly."""

    key: NormalMonomial
    x: NormalMonomial
    unit: ClassicalPoly
    coeff: ClassicalPoly
    value: ClassicalPoly


@dataclass(frozen=True)
class FrobeniusContext:
    """Parameters of the pairing: dimension, odd root order, and variant."""

    n: int
    ell: int
    variant: str = "m"
    order: GenOrder | None = None

    def __post_init__(self):
        if self.variant not in ("m", "gl"):
            raise ValueError("the pairing is defined for the plain and localized variants")
        CycloRing(self.ell)  # validates odd positive order
        if self.order is None:
            object.__setattr__(self, "order", row_major_order(self.n))

    @cached_property
    def config(self) -> AlgebraConfig:
        return AlgebraConfig(self.n, self.variant, self.order, CycloRing(self.ell), "standard")

    @property
    def ring(self) -> CycloRing:
        return self.config.ring

    @cached_property
    def top(self) -> NormalMonomial:
        """The distinguished monomial with every exponent ``l - 1``."""
        return NormalMonomial((self.ell - 1,) * (self.n * self.n), 0)

    @cached_property
    def _flat_config(self) -> AlgebraConfig:
        return AlgebraConfig(self.n, "m", self.order, CycloRing(self.ell), "standard")

    @cached_property
    def _flat_determinant(self) -> Element:
        from .detloc import quantum_determinant

        return quantum_determinant(self._flat_config)

    # -- the functional and the pairing --------------------------------------

    def phi(self, e: Element) -> ClassicalPoly:
        """Classical coefficient of the top residue monomial in ``e``.

        For the plain variant this is the expansion entry at the top key.
        The localized variant is handled by classical-linearity over the
        same determinant-free basis: a key's determinant power splits into
        a classical scalar ``Dbar**a`` and a residue in ``[0, l)``, and the
        residue is cleared by multiplying out actual determinant factors
        before projecting.  (Projecting the raw expansion instead would
        vanish identically on localized normal forms, whose residues always
        have a zero diagonal entry.)
        """
        if e.config != self.config:
            raise ValueError("element lives outside this pairing context")
        if self.variant == "m":
            expansion = module_expand(e)
            found = expansion.entries.get(self.top)
            return found if found is not None else ClassicalPoly.zero(self.ring, self.n)
        total = ClassicalPoly.zero(self.ring, self.n)
        zero_exps = (0,) * (self.n * self.n)
        for key, coeff in e.terms.items():
            d_quot, d_res = divmod(key.dpower, self.ell)
            flat = Element.monomial(self._flat_config, NormalMonomial(key.exps), coeff)
            for _ in range(d_res):
                flat = multiply(flat, self._flat_determinant)
            part = module_expand(flat).entries.get(self.top)
            if part is None:
                continue
            total = total + part * ClassicalPoly.monomial(
                self.ring, self.n, ClassicalMonomial(zero_exps, d_quot)
            )
        return total

    def bform(self, x: Element, y: Element) -> ClassicalPoly:
        if x.config != self.config or y.config != self.config:
            raise ValueError("operands live outside this pairing context")
        return self.phi(multiply(x, y))

    def element(self, m: NormalMonomial) -> Element:
        return Element.from_monomials(self.config, [(m, 1)])

    # -- witnesses ------------------------------------------------------------

    def dual_witness(self, m: NormalMonomial) -> NormalMonomial:
        """The complementary monomial with exponents ``l - 1 - N[i,j]``."""
        ell = self.ell
        if any(not 0 <= v < ell for v in m.exps) or not 0 <= m.dpower < ell:
            raise ValueError(f"exponents of {m} fall outside [0, {ell})")
        return NormalMonomial(
            tuple(ell - 1 - v for v in m.exps), (-m.dpower) % ell
        )

    def _unit_candidates(self):
        zero_exps = (0,) * (self.n * self.n)
        dpowers = (0, 1) if self.variant == "gl" else (0,)
        for d in dpowers:
            for k in range(self.ell):
                for sign in (1, -1):
                    scalar = self.ring.q_power(k)
                    yield ClassicalPoly.monomial(
                        self.ring, self.n, ClassicalMonomial(zero_exps, d), sign * scalar
                    )

    def check_nondegenerate(self, a: Element) -> Witness:
        """Produce ``x`` with ``phi(x a)`` a unit times a leading coefficient.

        Picks the expansion key of maximal weight (ties broken by the
        determinant residue), pairs with its dual witness, and verifies the
        unit relation exactly.
        """
        if a.is_zero():
            raise ValueError("the zero element has no non-degeneracy witness")
        expansion = module_expand(a)
        key = max(
            expansion.entries, key=lambda k: (k.weight(), k.exps, k.dpower)
        )
        coeff = expansion.entries[key]
        x = self.dual_witness(key)
        value = self.phi(multiply(self.element(x), a))
        for unit in self._unit_candidates():
            if value == unit * coeff:
                return Witness(key, x, unit, coeff, value)
        raise ArithmeticError(
            f"phi(x a) = {value} is not a unit multiple of the leading coefficient {coeff}"
        )

    # -- the twist -------------------------------------------------------------

    def nakayama(self, e: Element, inverse: bool = False) -> Element:
        """Rescale every monomial by the root-of-unity twist; keys unchanged."""
        if e.config != self.config:
            raise ValueError("element lives outside this pairing context")
        n = self.n
        flip = -1 if inverse else 1
        out = {}
        for key, coeff in e.terms.items():
            total = 0
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    v = key.exps[(i - 1) * n + (j - 1)]
                    if v:
                        total += v * nakayama_exponent(n, i, j)
            c = coeff * self.ring.q_power(flip * total)
            if c:
                out[key] = c
        return Element(self.config, out, _raw=True)

    def nakayama_monomial_scalar(self, m: NormalMonomial) -> CycloElem:
        n = self.n
        total = 0
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                total += m.exps[(i - 1) * n + (j - 1)] * nakayama_exponent(n, i, j)
        return self.ring.q_power(total)


def default_symmetry_pairs(n: int, ell: int, limit: int = 500):
    """Deterministic pair sample for the pairing-symmetry check.

    Exhaustive when the full grid is small; otherwise a fixed stride sample
    of ``limit`` pairs.
    """
    basis = list(enumerate_basis(n, ell, "m"))
    total = len(basis) * len(basis)
    if total <= 7000:
        return [(x, y) for x in basis for y in basis]
    stride = max(total // limit, 1)
    pairs = []
    for idx in range(0, total, stride):
        if len(pairs) == limit:
            break
        pairs.append((basis[idx // len(basis)], basis[idx % len(basis)]))
    return pairs


def check_nakayama(n: int, ell: int, symmetry_pairs=None) -> CheckReport:
    """Verify the twist identity and the pairing symmetry.

    For every generator ``t[i,j]`` and every residue basis monomial ``m``:
    ``phi(m * t[i,j]) == eps**(2*(n+1-i-j)) * phi(t[i,j] * m)`` exactly,
    and ``B(x, y) == B(nu(y), x)`` on the supplied (or default) pair sample.
    """
    ctx = FrobeniusContext(n, ell)
    cfg = ctx.config
    report = CheckReport("nakayama", n, ell)
    basis = list(enumerate_basis(n, ell, "m"))
    gens = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]

    def twist_case(args):
        (i, j), m = args
        word = m.word(cfg.order)
        left = Element.from_words(cfg, [(word + ((i, j),), 1)])
        right = Element.from_words(cfg, [(((i, j),) + word, 1)])
        scalar = ctx.ring.q_power(nakayama_exponent(n, i, j))
        lhs = ctx.phi(left)
        rhs = ctx.phi(right) * scalar
        return args, lhs - rhs

    cases = [((i, j), m) for (i, j) in gens for m in basis]
    for ((i, j), m), residual in map_cases(twist_case, cases):
        report.add(
            f"t[{i},{j}] twisted past {monomial_to_str(m, cfg.order) or '1'}",
            str(residual),
            residual.is_zero(),
        )

    if symmetry_pairs is None:
        symmetry_pairs = default_symmetry_pairs(n, ell)

    def symmetry_case(pair):
        x, y = pair
        wx = x.word(cfg.order)
        wy = y.word(cfg.order)
        lhs = ctx.phi(Element.from_words(cfg, [(wx + wy, 1)]))
        rhs = ctx.phi(Element.from_words(cfg, [(wy + wx, 1)])) * ctx.nakayama_monomial_scalar(y)
        return pair, lhs - rhs

    for (x, y), residual in map_cases(symmetry_case, symmetry_pairs):
        report.add(
            f"B({monomial_to_str(x, cfg.order) or '1'}, {monomial_to_str(y, cfg.order) or '1'}) symmetry",
            str(residual),
            residual.is_zero(),
        )
    return report
