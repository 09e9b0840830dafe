"""Tests for the exact coefficient rings."""

import random

import pytest

from qcoord.coeff import (
    CycloElem,
    CycloRing,
    LaurentPoly,
    LaurentRing,
    cyclotomic,
    reduce_mod,
    specialize_at_one,
)


def random_laurent(rng, max_terms=4, span=4, bound=5):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[rng.randint(-span, span)] = rng.randint(-bound, bound)
    return LaurentPoly(terms)


def totient(n):
    count = 0
    for k in range(1, n + 1):
        a, b = k, n
        while b:
            a, b = b, a % b
        if a == 1:
            count += 1
    return count


class TestCyclotomic:
    def test_order_one_is_base_case(self):
        assert cyclotomic(1).phi == (-1, 1)  # q - 1

    def test_order_three(self):
        # oracle: (q^3 - 1) / (q - 1)
        from qcoord.coeff import _dense_divmod

        quo, rem = _dense_divmod((-1, 0, 0, 1), (-1, 1))
        assert rem == ()
        assert cyclotomic(3).phi == quo == (1, 1, 1)

    def test_order_nine(self):
        # oracle: (q^9 - 1) / ((q - 1)(q^2 + q + 1))
        from qcoord.coeff import _dense_divmod, _dense_mul

        denom = _dense_mul((-1, 1), (1, 1, 1))
        quo, rem = _dense_divmod((-1,) + (0,) * 8 + (1,), denom)
        assert rem == ()
        assert cyclotomic(9).phi == quo == (1, 0, 0, 1, 0, 0, 1)

    @pytest.mark.parametrize("bad", [0, -3, 2, 6, 10])
    def test_rejects_even_and_nonpositive_orders(self, bad):
        with pytest.raises(ValueError):
            cyclotomic(bad)

    @pytest.mark.parametrize("ell", [1, 3, 5, 7, 9, 11, 13, 15])
    def test_divisor_product(self, ell):
        product = LaurentPoly(1)
        for d in range(1, ell + 1):
            if ell % d == 0:
                product = product * cyclotomic(d).poly()
        assert product == LaurentPoly({ell: 1, 0: -1})

    @pytest.mark.parametrize("ell", [1, 3, 5, 9, 15])
    def test_degree_is_totient(self, ell):
        assert cyclotomic(ell).degree == totient(ell)


class TestReduceMod:
    def test_q_cubed_mod_three(self):
        m = cyclotomic(3)
        assert reduce_mod(LaurentPoly.q_power(3), m) == CycloElem((1,), m)

    def test_negative_exponent_is_inverse_power(self):
        m = cyclotomic(3)
        assert reduce_mod(LaurentPoly.q_power(-1), m) == reduce_mod(LaurentPoly.q_power(2), m)

    def test_q_diff_reduces_per_monomial(self):
        # oracle: reduce each monomial independently and add
        m = cyclotomic(3)
        whole = reduce_mod(LaurentPoly.q_diff(), m)
        split = reduce_mod(LaurentPoly.q_power(1), m) - reduce_mod(LaurentPoly.q_power(-1), m)
        assert whole == split
        assert whole == reduce_mod(LaurentPoly.q_power(1) - LaurentPoly.q_power(2), m)

    def test_power_of_order_is_one(self):
        for ell in (1, 3, 5, 9):
            m = cyclotomic(ell)
            assert reduce_mod(LaurentPoly.q_power(ell), m) == CycloElem((1,), m)

    def test_is_ring_homomorphism(self):
        rng = random.Random(71)
        m = cyclotomic(5)
        for _ in range(60):
            a = random_laurent(rng)
            b = random_laurent(rng)
            assert reduce_mod(a * b, m) == reduce_mod(a, m) * reduce_mod(b, m)
            assert reduce_mod(a + b, m) == reduce_mod(a, m) + reduce_mod(b, m)

    def test_residues_are_canonical(self):
        m = cyclotomic(3)
        for p in (LaurentPoly.q_power(2), LaurentPoly({2: 1, 1: 1, 0: 1})):
            res = reduce_mod(p, m)
            assert len(res.residue) == m.degree


class TestSpecializeAtOne:
    @pytest.mark.parametrize(
        "poly,value",
        [
            (LaurentPoly.q_diff(), 0),
            (LaurentPoly({2: 1, 1: 1, 0: 1}), 3),
            (LaurentPoly({3: -1}), -1),  # (-q)^3
        ],
    )
    def test_examples(self, poly, value):
        assert specialize_at_one(poly) == value

    def test_commutes_with_arithmetic(self):
        rng = random.Random(17)
        for _ in range(50):
            a = random_laurent(rng)
            b = random_laurent(rng)
            assert specialize_at_one(a + b) == specialize_at_one(a) + specialize_at_one(b)
            assert specialize_at_one(a * b) == specialize_at_one(a) * specialize_at_one(b)


class TestRingAxioms:
    def test_laurent_axioms(self):
        rng = random.Random(5)
        for _ in range(40):
            a, b, c = (random_laurent(rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c

    def test_q_times_q_inverse(self):
        assert LaurentPoly.q_power(1) * LaurentPoly.q_power(-1) == LaurentPoly(1)

    def test_cyclo_axioms(self):
        rng = random.Random(6)
        ring = CycloRing(9)
        elems = [ring.from_laurent(random_laurent(rng)) for _ in range(12)]
        for a, b, c in zip(elems, elems[1:], elems[2:]):
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_mixed_moduli_rejected(self):
        a = CycloRing(3).one()
        b = CycloRing(5).one()
        with pytest.raises(ValueError):
            a + b


class TestUnits:
    def test_laurent_unit_power(self):
        ring = LaurentRing()
        assert ring.unit_power(LaurentPoly({3: -1})) == (-1, 3)
        assert ring.unit_power(LaurentPoly({0: 2})) is None
        assert ring.unit_power(LaurentPoly.q_diff()) is None
        assert ring.invert_unit(LaurentPoly.q_power(2)) == LaurentPoly.q_power(-2)

    def test_cyclo_unit_power(self):
        ring = CycloRing(3)
        eps2 = ring.q_power(2)
        assert ring.unit_power(eps2) == (1, 2)
        assert ring.unit_power(-eps2) == (-1, 2)
        assert ring.invert_unit(eps2) * eps2 == ring.one()
        assert ring.unit_power(ring.from_int(2)) is None
        with pytest.raises(ArithmeticError):
            ring.invert_unit(ring.from_int(2))

    def test_minus_one_is_not_a_root_power(self):
        # for odd order, -1 never equals a power of the root
        ring = CycloRing(5)
        assert ring.unit_power(ring.from_int(-1)) == (-1, 0)
        for k in range(1, 5):
            assert ring.q_power(k) != ring.from_int(-1)


class TestRendering:
    @pytest.mark.parametrize(
        "poly,text",
        [
            (LaurentPoly({-1: 1, 0: 2, 3: -1}), "q^-1 + 2 - q^3"),
            (LaurentPoly(), "0"),
            (LaurentPoly({1: -3}), "-3 q"),
            (LaurentPoly({0: 1}), "1"),
        ],
    )
    def test_laurent_str(self, poly, text):
        assert str(poly) == text

    def test_cyclo_str(self):
        ring = CycloRing(3)
        assert str(ring.q_power(2)) == "-1 - q"
