from fractions import Fraction

from django.test import SimpleTestCase

from arith.exceptions import DomainError, InvariantViolation
from arith.laurent import POLY_ONE, LaurentMatrix, Z
from arith.scalars import GaussianRational, I
from arith.serializers import dump, load
from lattices.alpha import alpha
from loops.corpus import product_loops, rotations, su2_loops
from loops.generators import lambda_matrix
from loops.unitary import GroupTag, check_poly_loop, conjugate_action
from strata.bundle import phi
from strata.corpus import chart_corpus

from .complement import complement_basis
from .scaled import (
    ScaledLoop, beta, evaluate_scaled_loop, generated_lattice, represented_loop, scaled_loop_equals,
    special_linear_check,
)
from .serializers import ScaledLoopSerializer


def _lambda(r):
    return check_poly_loop(lambda_matrix(r), r, GroupTag.SU2)


class ComplementTests(SimpleTestCase):
    def test_orthogonal_pair(self):
        for f in su2_loops(2):
            first, second = complement_basis(alpha(f))
            self.assertTrue(first.vector.inner(second.vector).is_zero)
            self.assertEqual(first.norm_sq, first.vector.norm_sq())


class BetaAlphaTests(SimpleTestCase):
    def test_loops_are_recovered(self):
        loops = su2_loops(3) + product_loops()
        self.assertGreaterEqual(len(loops), 50)
        for f in loops:
            self.assertTrue(scaled_loop_equals(beta(alpha(f)), f), f.matrix)

    def test_lattices_are_recovered(self):
        for f in su2_loops(3):
            w = alpha(f)
            self.assertEqual(generated_lattice(beta(w), w.r), w)

    def test_represented_loop(self):
        f = _lambda(2)
        self.assertEqual(represented_loop(beta(alpha(f))), f)

    def test_phi_images_are_recovered(self):
        for s, x in chart_corpus(seed=6, count=12, max_r=2):
            w = phi(s, x)
            self.assertEqual(generated_lattice(beta(w), w.r), w)

    def test_equivariance(self):
        for f in su2_loops(2)[::3] + product_loops()[::7]:
            for g in rotations()[1:4]:
                s = beta(alpha(f).act(g))
                self.assertTrue(scaled_loop_equals(s, conjugate_action(g, f)))

    def test_special_linear(self):
        for f in su2_loops(2):
            report = special_linear_check(beta(alpha(f)))
            self.assertTrue(report['special'])
            self.assertEqual(report['det_ratio'], POLY_ONE)


class ScaledLoopTests(SimpleTestCase):
    def test_wrong_norm(self):
        with self.assertRaises(InvariantViolation):
            ScaledLoop(LaurentMatrix.identity(), (Fraction(1), Fraction(2)))

    def test_non_positive_norm(self):
        with self.assertRaises(DomainError):
            ScaledLoop(LaurentMatrix.identity(), (Fraction(1), Fraction(0)))

    def test_singular_at_one(self):
        nb = LaurentMatrix.diagonal(Z - 1, POLY_ONE)
        with self.assertRaises(InvariantViolation):
            ScaledLoop(nb, (Fraction(2), Fraction(1))).at_one_inverse()

    def test_payload(self):
        s = beta(alpha(_lambda(1)))
        self.assertEqual(load(ScaledLoopSerializer, dump(ScaledLoopSerializer, s)), s)


class EvaluationTests(SimpleTestCase):
    def _contains(self, interval, value):
        lo, hi = (float(x) for x in interval)
        return lo <= value <= hi

    def test_lambda_at_i(self):
        s = beta(alpha(_lambda(1)))
        for point in (I, Fraction(1, 4)):
            value = evaluate_scaled_loop(s, point, bits=64)
            self.assertTrue(self._contains(value[0][0]['im'], 1.0))
            self.assertTrue(self._contains(value[0][0]['re'], 0.0))
            self.assertTrue(self._contains(value[1][1]['im'], -1.0))
            self.assertTrue(self._contains(value[0][1]['re'], 0.0))

    def test_point_off_circle(self):
        s = beta(alpha(_lambda(1)))
        with self.assertRaises(DomainError):
            evaluate_scaled_loop(s, GaussianRational(1, 1))

    def test_corpus_enclosures_are_unitary(self):
        loops = su2_loops(2)[::3] + product_loops()[::7]
        for f in loops:
            s = beta(alpha(f))
            for point in (I, Fraction(1, 4), Fraction(1, 3)):
                value = evaluate_scaled_loop(s, point, bits=53)
                self.assertEqual(len(value), 2)

    def test_non_unitary_enclosure_rejected(self):
        s = ScaledLoop(LaurentMatrix.diagonal(Z + 2, POLY_ONE), (Fraction(5), Fraction(1)))
        with self.assertRaises(InvariantViolation):
            evaluate_scaled_loop(s, I)
