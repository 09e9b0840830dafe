"""Tests for root-of-unity specialization and the free-module expansion."""

import random
from itertools import product

import pytest

from qcoord.coeff import CycloRing, LaurentPoly
from qcoord.monomial import NormalMonomial
from qcoord.rewrite import Element, make_config, multiply
from qcoord.rootspec import (
    ClassicalMonomial,
    ClassicalPoly,
    check_frobenius_central,
    enumerate_basis,
    frobenius_image,
    frobenius_image_poly,
    module_expand,
    specialize,
)


def random_element(rng, cfg, terms=3, max_exp=5):
    pairs = []
    for _ in range(terms):
        exps = tuple(rng.randint(0, max_exp) for _ in range(cfg.n * cfg.n))
        coeff = cfg.ring.q_power(rng.randint(0, 2)) * rng.randint(1, 3)
        if rng.random() < 0.4:
            coeff = -coeff
        pairs.append((NormalMonomial(exps), coeff))
    return Element.from_monomials(cfg, pairs)


class TestSpecialize:
    def test_coefficient_becomes_root(self):
        cfg = make_config(2)
        e = Element.generator(cfg, 1, 1).scale(LaurentPoly.q_power(1))
        s = specialize(e, 3)
        assert s.terms == {NormalMonomial((1, 0, 0, 0)): CycloRing(3).q_power(1)}

    def test_multiples_of_modulus_vanish(self):
        cfg = make_config(2)
        e = Element.generator(cfg, 1, 2).scale(LaurentPoly({3: 1, 0: -1}))  # q^3 - 1
        assert specialize(e, 3).is_zero()

    def test_q_diff_coefficient(self):
        cfg = make_config(2)
        ring = CycloRing(3)
        e = Element.generator(cfg, 2, 1).scale(LaurentPoly.q_diff())
        expected = ring.q_power(1) - ring.q_power(2)
        assert specialize(e, 3).terms == {NormalMonomial((0, 0, 1, 0)): expected}

    def test_keys_unchanged(self):
        rng = random.Random(53)
        cfg = make_config(2)
        e = random_element(rng, cfg)
        s = specialize(e, 7)
        assert set(s.terms) <= set(e.terms)

    def test_even_order_rejected(self):
        with pytest.raises(ValueError):
            specialize(Element.one(make_config(2)), 4)


class TestFrobeniusImage:
    def test_single_generator(self):
        cfg = make_config(2, ell=3)
        image = frobenius_image(ClassicalMonomial((1, 0, 0, 0)), cfg)
        assert image.terms == {NormalMonomial((3, 0, 0, 0)): cfg.ring.one()}

    def test_unit(self):
        cfg = make_config(2, ell=3)
        image = frobenius_image(ClassicalMonomial((0, 0, 0, 0)), cfg)
        assert image == Element.one(cfg)

    def test_diagonal_product_is_ordered(self):
        cfg = make_config(2, ell=3)
        image = frobenius_image(ClassicalMonomial((1, 0, 0, 1)), cfg)
        assert image.terms == {NormalMonomial((3, 0, 0, 3)): cfg.ring.one()}

    def test_is_ring_homomorphism(self):
        rng = random.Random(59)
        cfg = make_config(2, ell=3)
        ring = cfg.ring
        for _ in range(10):
            c1 = ClassicalMonomial(tuple(rng.randint(0, 2) for _ in range(4)))
            c2 = ClassicalMonomial(tuple(rng.randint(0, 2) for _ in range(4)))
            prod = ClassicalMonomial(tuple(a + b for a, b in zip(c1.exps, c2.exps)))
            assert frobenius_image(prod, cfg) == multiply(
                frobenius_image(c1, cfg), frobenius_image(c2, cfg)
            )

    def test_gl_determinant_power(self):
        cfg = make_config(2, "gl", ell=3)
        image = frobenius_image(ClassicalMonomial((0, 0, 0, 0), -1), cfg)
        assert image.terms == {NormalMonomial((0, 0, 0, 0), -3): cfg.ring.one()}


class TestFrobeniusCentrality:
    @pytest.mark.parametrize("n,ell", [(2, 3), (2, 5), (1, 3), (1, 5), (2, 1)])
    def test_powers_are_central(self, n, ell):
        report = check_frobenius_central(n, ell)
        assert report.passed
        assert len(report.cases) == n ** 4


class TestModuleExpand:
    def test_exponent_above_order(self):
        cfg = make_config(2, ell=3)
        e = Element.from_monomials(cfg, [(NormalMonomial((4, 0, 0, 0)), 1)])
        exp = module_expand(e)
        assert exp.entries == {
            NormalMonomial((1, 0, 0, 0)): ClassicalPoly.monomial(
                cfg.ring, 2, ClassicalMonomial((1, 0, 0, 0))
            )
        }

    def test_basis_element_is_its_own_expansion(self):
        cfg = make_config(2, ell=3)
        m = NormalMonomial((2, 1, 0, 2))
        exp = module_expand(Element.monomial(cfg, m))
        assert exp.entries == {m: ClassicalPoly.one(cfg.ring, 2)}

    def test_gl_negative_determinant_power(self):
        cfg = make_config(2, "gl", ell=3)
        exp = module_expand(Element.d_power(cfg, -1))
        assert exp.entries == {
            NormalMonomial((0, 0, 0, 0), 2): ClassicalPoly.monomial(
                cfg.ring, 2, ClassicalMonomial((0, 0, 0, 0), -1)
            )
        }
        assert exp.recombine() == Element.d_power(cfg, -1)

    def test_round_trip_random(self):
        rng = random.Random(61)
        cfg = make_config(2, ell=3)
        for _ in range(40):
            e = random_element(rng, cfg)
            assert module_expand(e).recombine() == e

    def test_round_trip_gl(self):
        rng = random.Random(67)
        cfg = make_config(2, "gl", ell=3)
        for _ in range(15):
            pairs = [
                (
                    NormalMonomial(
                        tuple(rng.randint(0, 4) for _ in range(4)), rng.randint(-4, 4)
                    ),
                    1,
                )
            ]
            e = Element.from_monomials(cfg, pairs)
            assert module_expand(e).recombine() == e

    def test_expansion_injective_on_keys(self):
        # the split of every exponent is Euclidean division, so the key map
        # is injective
        cfg = make_config(2, ell=3)
        seen = {}
        for exps in product(range(7), repeat=2):
            key = NormalMonomial((exps[0], 0, exps[1], 0))
            exp = module_expand(Element.monomial(cfg, key))
            signature = tuple(
                sorted((k, frozenset(v.terms.items())) for k, v in exp.entries.items())
            )
            assert signature not in seen
            seen[signature] = key

    def test_special_variant_rejected(self):
        cfg = make_config(2, "sl", ell=3)
        with pytest.raises(ValueError):
            module_expand(Element.one(cfg))


class TestEnumerateBasis:
    def test_counts(self):
        assert len(list(enumerate_basis(1, 3))) == 3
        assert len(list(enumerate_basis(2, 3))) == 81
        assert len(list(enumerate_basis(2, 1))) == 1
        assert len(list(enumerate_basis(2, 3, "gl"))) == 243

    def test_n1_generators(self):
        basis = list(enumerate_basis(1, 3))
        assert basis == [
            NormalMonomial((0,)),
            NormalMonomial((1,)),
            NormalMonomial((2,)),
        ]

    def test_exponents_in_range(self):
        for m in enumerate_basis(2, 3, "gl"):
            assert all(0 <= v < 3 for v in m.exps)
            assert 0 <= m.dpower < 3

    def test_special_variant_unsupported(self):
        with pytest.raises(ValueError):
            list(enumerate_basis(2, 3, "sl"))

    def test_even_order_rejected(self):
        with pytest.raises(ValueError):
            list(enumerate_basis(2, 4))


class TestClassicalPoly:
    def test_commutative_product(self):
        ring = CycloRing(3)
        a = ClassicalPoly.monomial(ring, 2, ClassicalMonomial((1, 0, 0, 0)))
        b = ClassicalPoly.monomial(ring, 2, ClassicalMonomial((0, 0, 0, 1)), ring.q_power(1))
        assert a * b == b * a
        ((key, coeff),) = (a * b).terms.items()
        assert key == ClassicalMonomial((1, 0, 0, 1))
        assert coeff == ring.q_power(1)

    def test_frobenius_image_of_poly_is_linear(self):
        cfg = make_config(2, ell=3)
        ring = cfg.ring
        p = ClassicalPoly(
            ring,
            2,
            {
                ClassicalMonomial((1, 0, 0, 0)): ring.one(),
                ClassicalMonomial((0, 1, 0, 0)): ring.q_power(2),
            },
        )
        direct = frobenius_image_poly(p, cfg)
        split = frobenius_image(ClassicalMonomial((1, 0, 0, 0)), cfg) + frobenius_image(
            ClassicalMonomial((0, 1, 0, 0)), cfg
        ).scale(ring.q_power(2))
        assert direct == split
