import random
from fractions import Fraction

from django.test import SimpleTestCase

from arith.exceptions import DomainError, RootOnCircleError
from arith.laurent import LaurentPoly
from arith.scalars import GaussianRational
from loops.corpus import rotations, u2_loops
from loops.unitary import conjugate_action

from .oracles import sampled_winding
from .roots import count_roots_in_open_unit_disk, has_root_on_unit_circle
from .serializers import WindingRequestSerializer
from .winding import assert_constant_if_unimodular, is_unimodular_on_circle, winding_number


def _random_poly(rng, degree):
    return LaurentPoly.from_coefficients([
        GaussianRational(rng.randint(-5, 5), rng.randint(-5, 5)) / rng.randint(1, 4)
        for _ in range(degree + 1)
    ])


class WindingTests(SimpleTestCase):
    def test_two_roots_one_inside(self):
        p = LaurentPoly.from_coefficients([1, Fraction(-5, 2), 1])
        self.assertEqual(winding_number(p).winding, 1)

    def test_pole_order_is_subtracted(self):
        h = LaurentPoly(((-2, 1), (-1, Fraction(-1, 2))))
        result = winding_number(h)
        self.assertEqual(result.pole_order_at_zero, 2)
        self.assertEqual(result.roots_inside, 0)
        self.assertEqual(result.winding, -2)

    def test_circle_roots_flagged(self):
        for p in (
            LaurentPoly.from_coefficients([-1, 1]),
            LaurentPoly.from_coefficients([1, 0, 1]),
        ):
            self.assertTrue(has_root_on_unit_circle(p))
            with self.assertRaises(RootOnCircleError) as ctx:
                winding_number(p)
            self.assertIn('pullback_real_roots', ctx.exception.certificate)

    def test_zero_polynomial(self):
        with self.assertRaises(DomainError):
            winding_number(LaurentPoly())

    def test_agrees_with_sampling_oracle(self):
        rng = random.Random(2024)
        checked = 0
        while checked < 100:
            p = _random_poly(rng, rng.randint(1, 8))
            if p.coeff(p.hi).is_zero or has_root_on_unit_circle(p):
                continue
            self.assertEqual(winding_number(p).winding, sampled_winding(p), str(p))
            checked += 1

    def test_winding_is_additive_over_products(self):
        rng = random.Random(77)
        polys = []
        while len(polys) < 24:
            p = _random_poly(rng, rng.randint(1, 5))
            if p.is_zero or has_root_on_unit_circle(p):
                continue
            polys.append(p.shift(rng.randint(-3, 3)))
        for p, q in zip(polys[::2], polys[1::2]):
            self.assertEqual(winding_number(p * q).winding, winding_number(p).winding + winding_number(q).winding)

    def test_determinant_winding_is_conjugation_invariant(self):
        for f in u2_loops(3):
            expected = winding_number(f.matrix.det()).winding
            for g in rotations():
                self.assertEqual(winding_number(conjugate_action(g, f).matrix.det()).winding, expected)

    def test_roots_at_origin_counted(self):
        p = LaurentPoly.from_coefficients([0, 0, 3])
        self.assertEqual(count_roots_in_open_unit_disk(p), 2)


class UnimodularTests(SimpleTestCase):
    def test_constant_of_modulus_one(self):
        p = LaurentPoly.constant(GaussianRational(Fraction(3, 5), Fraction(4, 5)))
        self.assertTrue(is_unimodular_on_circle(p))
        self.assertTrue(assert_constant_if_unimodular(p))

    def test_non_unimodular(self):
        self.assertFalse(assert_constant_if_unimodular(LaurentPoly.from_coefficients([1, 1])))

    def test_vanishing_constant_term(self):
        with self.assertRaises(DomainError):
            assert_constant_if_unimodular(LaurentPoly.from_coefficients([0, 1]))


class WindingRequestTests(SimpleTestCase):
    def test_zero_rejected(self):
        serializer = WindingRequestSerializer(data={'poly': []})
        self.assertFalse(serializer.is_valid())
