"""Deterministic text rendering for coefficients, monomials and elements.

The grammar emitted here round-trips through the expression parser: factors
are space-separated, exponents use ``^``, and multi-term coefficients are
parenthesized.
"""

from __future__ import annotations

from .coeff import CycloElem, LaurentPoly, _format_qpoly
from .monomial import GenOrder, NormalMonomial


def coeff_pairs(c) -> list[tuple[int, int]]:
    """(exponent, integer) pairs of a coefficient, ascending by exponent."""
    if isinstance(c, LaurentPoly):
        return sorted(c.terms.items())
    if isinstance(c, CycloElem):
        return [(e, v) for e, v in enumerate(c.residue) if v]
    raise TypeError(f"not a coefficient: {c!r}")


def monomial_to_str(
    m: NormalMonomial, order: GenOrder, symbol: str = "t", dsymbol: str = "D"
) -> str:
    """``t[1,1]^2 t[1,2] D^-1`` style; factors follow the active order."""
    n = order.n
    parts = []
    for i, j in order.seq:
        e = m.exps[(i - 1) * n + (j - 1)]
        if e == 1:
            parts.append(f"{symbol}[{i},{j}]")
        elif e:
            parts.append(f"{symbol}[{i},{j}]^{e}")
    if m.dpower == 1:
        parts.append(dsymbol)
    elif m.dpower:
        parts.append(f"{dsymbol}^{m.dpower}")
    return " ".join(parts)


def term_to_str(coeff, mon: str) -> tuple[int, str]:
    """Render one term as ``(sign, body)`` with ``sign`` +1 or -1."""
    pairs = coeff_pairs(coeff)
    if len(pairs) == 1:
        (e, v), = pairs
        sign = 1 if v > 0 else -1
        mag = abs(v)
        if e == 0:
            cpart = "" if (mag == 1 and mon) else str(mag)
        else:
            var = "q" if e == 1 else f"q^{e}"
            cpart = var if mag == 1 else f"{mag} {var}"
        body = " ".join(p for p in (cpart, mon) if p)
        return sign, body or "1"
    body = f"({_format_qpoly(pairs)})"
    return 1, f"{body} {mon}".strip()


def element_to_str(e) -> str:
    if e.is_zero():
        return "0"
    chunks: list[str] = []
    for m, coeff in e.sorted_terms():
        mon = monomial_to_str(m, e.config.order)
        sign, body = term_to_str(coeff, mon)
        if not chunks:
            chunks.append(body if sign > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if sign > 0 else f"- {body}")
    return " ".join(chunks)
