"""Root-of-unity specialization and the free-module structure over the
embedded classical coordinate ring.

At a primitive ``l``-th root of unity the ``l``-th powers of the generators
are central, and the assignment ``tbar[i,j] -> t[i,j]**l`` embeds the
commutative coordinate ring as central scalars.  Splitting every exponent
``N = l*a + r`` with ``0 <= r < l`` expands an element over the residue
monomials with classical coefficients; the expansion is unique and
recombines exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import isqrt
from typing import Iterator, NamedTuple

from ._concurrency import map_cases
from .coeff import CycloElem, CycloRing
from .monomial import NormalMonomial, row_major_order
from .render import monomial_to_str, term_to_str
from .report import CheckReport
from .rewrite import AlgebraConfig, Element, make_config, multiply


class ClassicalMonomial(NamedTuple):
    """A commutative monomial ``prod tbar[i,j]**exps[i,j] * Dbar**dpower``."""

    exps: tuple[int, ...]
    dpower: int = 0

    @property
    def n(self) -> int:
        return isqrt(len(self.exps))


class ClassicalPoly:
    """A finite combination of classical monomials with cyclotomic scalars."""

    __slots__ = ("ring", "n", "terms")

    def __init__(self, ring: CycloRing, n: int, terms: dict | None = None):
        self.ring = ring
        self.n = n
        self.terms: dict[ClassicalMonomial, CycloElem] = {
            m: c for m, c in (terms or {}).items() if c
        }

    @classmethod
    def zero(cls, ring: CycloRing, n: int) -> ClassicalPoly:
        return cls(ring, n, {})

    @classmethod
    def monomial(cls, ring: CycloRing, n: int, m: ClassicalMonomial, coeff=1) -> ClassicalPoly:
        return cls(ring, n, {m: ring.coerce(coeff)})

    @classmethod
    def one(cls, ring: CycloRing, n: int) -> ClassicalPoly:
        return cls.monomial(ring, n, ClassicalMonomial((0,) * (n * n), 0))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: ClassicalPoly) -> None:
        if self.ring != other.ring or self.n != other.n:
            raise ValueError("classical coefficients live over different rings")

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = ClassicalPoly.monomial(self.ring, self.n, ClassicalMonomial((0,) * (self.n * self.n), 0), other)
        if not isinstance(other, ClassicalPoly):
            return NotImplemented
        return self.ring == other.ring and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, self.n, frozenset(self.terms.items())))

    def __add__(self, other) -> ClassicalPoly:
        self._check(other)
        merged = dict(self.terms)
        for m, c in other.terms.items():
            s = merged.get(m)
            s = c if s is None else s + c
            if s:
                merged[m] = s
            else:
                merged.pop(m, None)
        return ClassicalPoly(self.ring, self.n, merged)

    def __neg__(self) -> ClassicalPoly:
        return ClassicalPoly(self.ring, self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> ClassicalPoly:
        return self + (-other)

    def __mul__(self, other) -> ClassicalPoly:
        if isinstance(other, (int, CycloElem)):
            c = self.ring.coerce(other)
            return ClassicalPoly(self.ring, self.n, {m: v * c for m, v in self.terms.items()})
        self._check(other)
        out: dict[ClassicalMonomial, CycloElem] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = ClassicalMonomial(
                    tuple(a + b for a, b in zip(m1.exps, m2.exps)), m1.dpower + m2.dpower
                )
                s = out.get(key)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return ClassicalPoly(self.ring, self.n, out)

    __rmul__ = __mul__

    def sorted_terms(self) -> list:
        return sorted(
            self.terms.items(),
            key=lambda kv: ((sum(kv[0].exps), *kv[0].exps), kv[0].dpower),
            reverse=True,
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        order = row_major_order(self.n)
        chunks: list[str] = []
        for m, coeff in self.sorted_terms():
            mon = monomial_to_str(
                NormalMonomial(m.exps, m.dpower), order, symbol="tbar", dsymbol="Dbar"
            )
            sign, body = term_to_str(coeff, mon)
            if not chunks:
                chunks.append(body if sign > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if sign > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"<ClassicalPoly {self}>"


def specialize(e: Element, ell: int) -> Element:
    """Base-change an element with Laurent coefficients to the root ring."""
    cfg = e.config
    if isinstance(cfg.ring, CycloRing):
        raise ValueError("element is already specialized")
    ring = CycloRing(ell)
    target = AlgebraConfig(cfg.n, cfg.variant, cfg.order, ring, cfg.flavor)
    return e.map_coefficients(ring.from_laurent, target)


def _require_cyclo(cfg: AlgebraConfig) -> CycloRing:
    if not isinstance(cfg.ring, CycloRing):
        raise ValueError("this operation needs a root-of-unity configuration")
    return cfg.ring


def _require_module_variant(cfg: AlgebraConfig) -> None:
    if cfg.variant == "sl":
        raise ValueError(
            "the free-module expansion covers the plain and localized variants only"
        )


def frobenius_image(c: ClassicalMonomial, cfg: AlgebraConfig) -> Element:
    """Embed a classical monomial: ``tbar**a -> t**(l*a)``, ``Dbar**z -> D**(l*z)``."""
    ring = _require_cyclo(cfg)
    _require_module_variant(cfg)
    ell = ring.ell
    if c.dpower and cfg.variant != "gl":
        raise ValueError("classical determinant powers need the localized variant")
    key = NormalMonomial(tuple(ell * a for a in c.exps), ell * c.dpower)
    return Element.from_monomials(cfg, [(key, 1)])


def frobenius_image_poly(p: ClassicalPoly, cfg: AlgebraConfig) -> Element:
    out = Element.zero(cfg)
    for m, coeff in p.terms.items():
        out = out + frobenius_image(m, cfg).scale(coeff)
    return out


def check_frobenius_central(n: int, ell: int) -> CheckReport:
    """``t[i,j]**l`` commutes with every generator after specialization."""
    cfg = make_config(n, "m", ell=ell)
    report = CheckReport("frobenius", n, ell)
    gens = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]

    def commutator(pair):
        g, h = pair
        power = (g,) * ell
        residual = Element.from_words(
            cfg, [(power + (h,), 1), ((h,) + power, -1)]
        )
        return pair, residual

    pairs = [(g, h) for g in gens for h in gens]
    for (g, h), residual in map_cases(commutator, pairs):
        report.add(
            f"t[{g[0]},{g[1]}]^{ell} against t[{h[0]},{h[1]}]",
            str(residual),
            residual.is_zero(),
        )
    return report


@dataclass
class ModuleExpansion:
    """Expansion over residue monomials with classical coefficients.

    ``entries`` maps residue keys (all exponents in ``[0, l)``, determinant
    residue in ``[0, l)`` for the localized variant) to classical
    coefficients.  ``recombine`` reproduces the expanded element exactly.
    """

    config: AlgebraConfig
    entries: dict[NormalMonomial, ClassicalPoly]

    def sorted_entries(self) -> list:
        return sorted(
            self.entries.items(),
            key=lambda kv: (kv[0].weight(), kv[0].exps, kv[0].dpower),
            reverse=True,
        )

    def recombine(self) -> Element:
        out = Element.zero(self.config)
        for key, cpoly in self.entries.items():
            residue = Element.from_monomials(self.config, [(key, 1)])
            for cm, coeff in cpoly.terms.items():
                out = out + multiply(frobenius_image(cm, self.config), residue).scale(coeff)
        return out


def module_expand(e: Element) -> ModuleExpansion:
    """Split every exponent by Euclidean division by ``l``.

    The quotient parts form a classical monomial acting as a scalar, the
    remainders form the residue key; the determinant power of the localized
    variant splits the same way.  Distinct reduced elements have distinct
    expansions because the split is injective.
    """
    cfg = e.config
    ring = _require_cyclo(cfg)
    _require_module_variant(cfg)
    ell = ring.ell
    n = cfg.n
    entries: dict[NormalMonomial, ClassicalPoly] = {}
    for key, coeff in e.terms.items():
        residue = tuple(v % ell for v in key.exps)
        quotient = tuple(v // ell for v in key.exps)
        d_res, d_quot = (key.dpower % ell, key.dpower // ell) if cfg.variant == "gl" else (0, 0)
        rkey = NormalMonomial(residue, d_res)
        part = ClassicalPoly.monomial(ring, n, ClassicalMonomial(quotient, d_quot), coeff)
        cur = entries.get(rkey)
        entries[rkey] = part if cur is None else cur + part
    return ModuleExpansion(cfg, {k: v for k, v in entries.items() if v})


def enumerate_basis(n: int, ell: int, variant: str = "m") -> Iterator[NormalMonomial]:
    """Stream the residue monomials: ``l**(n*n)`` of them, every exponent in
    ``[0, l)``; the localized variant appends a determinant residue in the
    same range."""
    CycloRing(ell)  # validates odd positive ell
    if variant == "m":
        for exps in product(range(ell), repeat=n * n):
            yield NormalMonomial(exps, 0)
    elif variant == "gl":
        for exps in product(range(ell), repeat=n * n):
            for d in range(ell):
                yield NormalMonomial(exps, d)
    else:
        raise ValueError(
            "the free-module expansion covers the plain and localized variants only"
        )
