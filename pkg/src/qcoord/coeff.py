"""Exact coefficient arithmetic for the quantum-matrix engine.

Two ground rings are supported:

* ``Z_q`` -- Laurent polynomials in ``q`` with arbitrary-precision integer
  coefficients, represented sparsely (exponent -> nonzero coefficient).
* ``Z_eps(l)`` -- the quotient ``Z[q] / (phi_l(q))`` for odd ``l >= 1``,
  where ``phi_l`` is the ``l``-th cyclotomic polynomial.  The class ``eps``
  of ``q`` is a primitive ``l``-th root of unity, so ``eps**l == 1``.

Everything here is exact integer arithmetic; there is no floating point.

>>> LaurentPoly.q_power(1) * LaurentPoly.q_power(-1)
LaurentPoly('1')
>>> str(cyclotomic(3).poly())
'1 + q + q^2'
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class LaurentPoly:
    """A Laurent polynomial in ``q`` over the integers.

    ``terms`` maps integer exponents to nonzero integer coefficients; the
    zero polynomial has no terms.  Instances are immutable in practice:
    every operation returns a fresh object and ``terms`` must not be
    mutated by callers.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | int = 0):
        if isinstance(terms, int):
            terms = {0: terms} if terms else {}
        else:
            terms = {e: c for e, c in terms.items() if c}
        self.terms = terms

    @classmethod
    def q_power(cls, k: int = 1) -> LaurentPoly:
        """The monomial ``q**k`` (``k`` may be negative)."""
        return cls({k: 1})

    @classmethod
    def q_diff(cls) -> LaurentPoly:
        """The scalar ``q - q**-1`` appearing in the commutation relations."""
        return cls({1: 1, -1: -1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly(other)
        merged = dict(self.terms)
        for e, c in other.terms.items():
            s = merged.get(e, 0) + c
            if s:
                merged[e] = s
            else:
                merged.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = merged
        return out

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly(other)
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return LaurentPoly(other) + (-self)

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            out = LaurentPoly.__new__(LaurentPoly)
            out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        prod: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = prod.get(e, 0) + c1 * c2
                if s:
                    prod[e] = s
                else:
                    del prod[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = prod
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative powers are defined only for units")
        result = LaurentPoly(1)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q**k`` (exponent shift)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e + k: c for e, c in self.terms.items()}
        return out

    def __str__(self) -> str:
        return _format_qpoly(sorted(self.terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


def _format_qpoly(pairs) -> str:
    """Render ``[(exponent, coeff), ...]`` as e.g. ``q^-1 + 2 - q^3``."""
    if not pairs:
        return "0"
    chunks: list[str] = []
    for e, c in pairs:
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "q" if e == 1 else f"q^{e}"
            body = var if mag == 1 else f"{mag} {var}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


def specialize_at_one(p: LaurentPoly) -> int:
    """Evaluate at ``q = 1``: the sum of all coefficients."""
    return sum(p.terms.values())


# ---------------------------------------------------------------------------
# Dense integer polynomials (ascending coefficients), used for the quotient
# ring.  Kept private; degrees here are tiny.
# ---------------------------------------------------------------------------


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def _dense_mul(a, b) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def _dense_divmod(num, den) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Exact division by a monic divisor; integer arithmetic throughout."""
    if not den or den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    quo = [0] * max(len(rem) - len(den) + 1, 0)
    for i in range(len(rem) - len(den), -1, -1):
        c = rem[i + len(den) - 1]
        if c:
            quo[i] = c
            for j, d in enumerate(den):
                rem[i + j] -= c * d
    return _trim(quo), _trim(rem)


@dataclass(frozen=True)
class CyclotomicModulus:
    """The ``l``-th cyclotomic polynomial ``phi_l`` for odd ``l``.

    ``phi`` holds dense ascending integer coefficients; ``phi_l`` is monic
    of degree ``totient(l)``.
    """

    ell: int
    phi: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.phi) - 1

    def poly(self) -> LaurentPoly:
        return LaurentPoly({e: c for e, c in enumerate(self.phi)})


@lru_cache(maxsize=None)
def cyclotomic(ell: int) -> CyclotomicModulus:
    """Compute ``phi_l`` by exact division of ``q**l - 1`` by all ``phi_d``
    with ``d`` a proper divisor of ``l``.

    Only odd ``l >= 1`` is accepted: the root-of-unity theory implemented
    here requires odd order.
    """
    if ell < 1 or ell % 2 == 0:
        raise ValueError(f"root order must be an odd positive integer, got {ell}")
    poly: tuple[int, ...] = tuple([-1] + [0] * (ell - 1) + [1])
    for d in range(1, ell):
        if ell % d == 0:
            poly, rem = _dense_divmod(poly, cyclotomic(d).phi)
            if rem:
                raise ArithmeticError("cyclotomic division left a remainder")
    return CyclotomicModulus(ell, poly)


class CycloElem:
    """An element of ``Z[q] / (phi_l(q))``, stored as the canonical residue.

    The residue is a dense coefficient tuple of length ``degree(phi_l)``.
    """

    __slots__ = ("residue", "modulus")

    def __init__(self, residue, modulus: CyclotomicModulus):
        deg = modulus.degree
        res = list(residue[:deg]) + [0] * max(deg - len(residue), 0)
        if len(residue) > deg:
            raise ValueError("residue degree must be below the modulus degree")
        self.residue = tuple(res)
        self.modulus = modulus

    def is_zero(self) -> bool:
        return not any(self.residue)

    def __bool__(self) -> bool:
        return any(self.residue)

    def _check(self, other: CycloElem) -> None:
        if self.modulus.ell != other.modulus.ell:
            raise ValueError("mixed cyclotomic moduli")

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == CycloElem((other,), self.modulus)
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.modulus.ell == other.modulus.ell and self.residue == other.residue

    def __hash__(self) -> int:
        return hash((self.modulus.ell, self.residue))

    def __add__(self, other) -> CycloElem:
        if isinstance(other, int):
            other = CycloElem((other,), self.modulus)
        self._check(other)
        return CycloElem([a + b for a, b in zip(self.residue, other.residue)], self.modulus)

    __radd__ = __add__

    def __neg__(self) -> CycloElem:
        return CycloElem([-a for a in self.residue], self.modulus)

    def __sub__(self, other) -> CycloElem:
        if isinstance(other, int):
            other = CycloElem((other,), self.modulus)
        return self + (-other)

    def __mul__(self, other) -> CycloElem:
        if isinstance(other, int):
            return CycloElem([a * other for a in self.residue], self.modulus)
        self._check(other)
        prod = _dense_mul(self.residue, other.residue)
        _, rem = _dense_divmod(prod, self.modulus.phi)
        return CycloElem(rem, self.modulus)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return _format_qpoly([(e, c) for e, c in enumerate(self.residue) if c])

    def __repr__(self) -> str:
        return f"CycloElem('{self}' mod phi_{self.modulus.ell})"


def reduce_mod(p: LaurentPoly, m: CyclotomicModulus) -> CycloElem:
    """Canonical residue of a Laurent polynomial in ``Z[q]/(phi_l)``.

    Negative exponents are cleared through ``eps**-1 == eps**(l-1)`` (each
    exponent is reduced modulo ``l``), after which ordinary polynomial
    remainder by ``phi_l`` applies.  The map is a ring homomorphism.
    """
    ell = m.ell
    dense = [0] * ell
    for e, c in p.terms.items():
        dense[e % ell] += c
    _, rem = _dense_divmod(_trim(dense), m.phi)
    return CycloElem(rem, m)


# ---------------------------------------------------------------------------
# Ring adapters: a uniform constructor/arithmetic surface over the two
# coefficient rings, so the rewriting engine is generic over both.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LaurentRing:
    """The ground ring ``Z_q = Z[q, q^-1]``."""

    @property
    def name(self) -> str:
        return "Z_q"

    def zero(self) -> LaurentPoly:
        return LaurentPoly()

    def one(self) -> LaurentPoly:
        return LaurentPoly(1)

    def from_int(self, k: int) -> LaurentPoly:
        return LaurentPoly(k)

    def q_power(self, k: int) -> LaurentPoly:
        return LaurentPoly.q_power(k)

    def coerce(self, value) -> LaurentPoly:
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return LaurentPoly(value)
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    def from_laurent(self, p: LaurentPoly) -> LaurentPoly:
        return p

    def shift(self, c: LaurentPoly, k: int) -> LaurentPoly:
        return c.shift(k)

    def qdiff_mul(self, c: LaurentPoly, sign: int) -> LaurentPoly:
        up = c.shift(1)
        down = c.shift(-1)
        return (up - down) if sign > 0 else (down - up)

    def unit_power(self, c: LaurentPoly) -> tuple[int, int] | None:
        """Return ``(sign, k)`` when ``c == sign * q**k``, else ``None``."""
        if len(c.terms) != 1:
            return None
        (e, v), = c.terms.items()
        if v in (1, -1):
            return v, e
        return None

    def invert_unit(self, c: LaurentPoly) -> LaurentPoly:
        up = self.unit_power(c)
        if up is None:
            raise ArithmeticError(f"{c!r} is not a unit of {self.name}")
        sign, e = up
        return LaurentPoly({-e: sign})


@lru_cache(maxsize=None)
def _eps_powers(ell: int) -> tuple[CycloElem, ...]:
    m = cyclotomic(ell)
    return tuple(reduce_mod(LaurentPoly.q_power(k), m) for k in range(ell))


@dataclass(frozen=True)
class CycloRing:
    """The specialized ring ``Z_eps(l) = Z[q]/(phi_l)`` for odd ``l``."""

    ell: int

    def __post_init__(self):
        cyclotomic(self.ell)  # validates odd positive ell

    @property
    def name(self) -> str:
        return f"Z_eps({self.ell})"

    @property
    def modulus(self) -> CyclotomicModulus:
        return cyclotomic(self.ell)

    def zero(self) -> CycloElem:
        return CycloElem((), self.modulus)

    def one(self) -> CycloElem:
        return CycloElem((1,), self.modulus)

    def from_int(self, k: int) -> CycloElem:
        return CycloElem((k,), self.modulus)

    def q_power(self, k: int) -> CycloElem:
        return _eps_powers(self.ell)[k % self.ell]

    def coerce(self, value) -> CycloElem:
        if isinstance(value, CycloElem):
            if value.modulus.ell != self.ell:
                raise ValueError("mixed cyclotomic moduli")
            return value
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, LaurentPoly):
            return reduce_mod(value, self.modulus)
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    def from_laurent(self, p: LaurentPoly) -> CycloElem:
        return reduce_mod(p, self.modulus)

    def shift(self, c: CycloElem, k: int) -> CycloElem:
        return c * self.q_power(k)

    def qdiff_mul(self, c: CycloElem, sign: int) -> CycloElem:
        d = self.q_power(1) - self.q_power(self.ell - 1)
        return c * d if sign > 0 else c * (-d)

    def unit_power(self, c: CycloElem) -> tuple[int, int] | None:
        """Return ``(sign, k)`` when ``c == sign * eps**k``, else ``None``."""
        for k, p in enumerate(_eps_powers(self.ell)):
            if c == p:
                return 1, k
            if c == -p:
                return -1, k
        return None

    def invert_unit(self, c: CycloElem) -> CycloElem:
        up = self.unit_power(c)
        if up is None:
            raise ArithmeticError(f"{c!r} is not recognized as a unit of {self.name}")
        sign, k = up
        inv = self.q_power((-k) % self.ell)
        return inv if sign > 0 else -inv
