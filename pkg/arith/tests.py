import random
from fractions import Fraction

from django.test import SimpleTestCase
from rest_framework import serializers

from .exceptions import DimensionError, DomainError
from .laurent import POLY_ONE, LaurentMatrix, LaurentPoly, VectorLaurent, Z
from .linalg import mat_inverse, mat_mul, nullspace, rank, rref, solve
from .scalars import GaussianRational, I, ONE, ZERO
from .serializers import LaurentMatrixSerializer, LaurentPolyField, load


class GaussianRationalTests(SimpleTestCase):
    def test_field_operations_are_exact(self):
        x = GaussianRational(Fraction(3, 5), Fraction(4, 5))
        self.assertEqual(x * x.conjugate(), ONE)
        self.assertEqual(x.inverse(), x.conjugate())
        self.assertEqual(I * I, GaussianRational(-1))
        self.assertEqual((ONE + I) / (ONE - I), I)

    def test_strings_round_trip(self):
        x = GaussianRational.from_strings('-7/3', '2/4')
        self.assertEqual(x.to_strings(), ['-7/3', '1/2'])

    def test_division_by_zero(self):
        with self.assertRaises(ZeroDivisionError):
            ONE / ZERO


class LaurentPolyTests(SimpleTestCase):
    def test_terms_are_canonical(self):
        p = LaurentPoly(((1, 2), (0, 1), (1, -2)))
        self.assertEqual(p, POLY_ONE)
        self.assertEqual(LaurentPoly(((3, 0),)).terms, ())

    def test_star_and_reflect(self):
        p = LaurentPoly(((2, I), (-1, 3)))
        self.assertEqual(p.star(), LaurentPoly(((-2, -I), (1, 3))))
        self.assertEqual(p.reflect(), LaurentPoly(((-2, I), (1, 3))))

    def test_evaluate_at_i(self):
        p = Z * Z + 1
        self.assertTrue(p.evaluate(I).is_zero)
        self.assertEqual(Z.shift(-3).evaluate(I), GaussianRational(-1))

    def test_substitute_scale(self):
        p = LaurentPoly.from_coefficients([1, 1, 1])
        self.assertEqual(p.substitute_scale(Fraction(1, 2)), LaurentPoly.from_coefficients([1, Fraction(1, 2), Fraction(1, 4)]))


class LaurentMatrixTests(SimpleTestCase):
    def test_det_of_lambda(self):
        m = LaurentMatrix.diagonal(Z, Z.shift(-2))
        self.assertEqual(m.det(), POLY_ONE)

    def test_star_is_inverse_for_unitary_loop(self):
        m = LaurentMatrix.diagonal(Z, Z.shift(-2))
        self.assertTrue((m @ m.star()).is_identity())

    def test_non_square_rejected(self):
        with self.assertRaises(DimensionError):
            LaurentMatrix(((1, 0), (0,)))

    def test_vector_inner_product(self):
        v = VectorLaurent((Z, LaurentPoly.constant(I)))
        self.assertEqual(v.inner(v), ONE + ONE)
        self.assertEqual(v.norm_sq(), 2)



def _random_matrix(rng):
    def entry():
        return LaurentPoly(tuple(
            (k, GaussianRational(rng.randint(-4, 4), rng.randint(-4, 4))) for k in range(-2, 3)
            if rng.random() < 0.6
        ))
    return LaurentMatrix(tuple(tuple(entry() for _ in range(2)) for _ in range(2)))


class MatrixIdentityTests(SimpleTestCase):
    points = (I, GaussianRational(Fraction(3, 5), Fraction(4, 5)), GaussianRational(2, -1))

    def setUp(self):
        rng = random.Random(11)
        self.pairs = [(_random_matrix(rng), _random_matrix(rng)) for _ in range(20)]

    def test_star_reverses_products(self):
        for a, b in self.pairs:
            self.assertEqual((a @ b).star(), b.star() @ a.star())
            self.assertEqual(a.star().star(), a)

    def test_det_is_multiplicative(self):
        for a, b in self.pairs:
            self.assertEqual((a @ b).det(), a.det() * b.det())

    def test_evaluation_is_a_homomorphism(self):
        for a, b in self.pairs:
            for zeta in self.points:
                self.assertEqual((a @ b).evaluate(zeta), mat_mul(a.evaluate(zeta), b.evaluate(zeta)))
                self.assertEqual((a + b).evaluate(zeta), tuple(
                    tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(a.evaluate(zeta), b.evaluate(zeta))
                ))


class LinalgTests(SimpleTestCase):
    def test_rref_and_rank(self):
        rows = [[1, 2, 3], [2, 4, 6], [0, 1, I]]
        reduced, pivots = rref(rows)
        self.assertEqual(pivots, [0, 1])
        self.assertEqual(rank(rows), 2)
        self.assertEqual(reduced[0][0], ONE)

    def test_nullspace_is_annihilated(self):
        rows = [[1, I, 0], [0, 1, 1]]
        for x in nullspace(rows):
            for row in rows:
                self.assertTrue(sum((GaussianRational.coerce(a) * b for a, b in zip(row, x)), ZERO).is_zero)

    def test_solve_inconsistent(self):
        solution, free = solve([[1, 1], [1, 1]], [ONE, ZERO])
        self.assertIsNone(solution)
        self.assertEqual(free, [])

    def test_singular_inverse(self):
        with self.assertRaises(DomainError):
            mat_inverse(((ONE, ONE), (ONE, ONE)))


class SerializerTests(SimpleTestCase):
    def test_poly_field(self):
        field = LaurentPolyField()
        p = field.to_internal_value([[-1, '1/2', '0/1'], [2, '0/1', '3/1']])
        self.assertEqual(p, LaurentPoly(((-1, Fraction(1, 2)), (2, 3 * I))))
        self.assertEqual(field.to_representation(p), [[-1, '1/2', '0/1'], [2, '0/1', '3/1']])

    def test_duplicate_exponent(self):
        with self.assertRaises(serializers.ValidationError):
            LaurentPolyField().run_validation([[0, '1/1', '0/1'], [0, '2/1', '0/1']])

    def test_matrix_shape_checked(self):
        with self.assertRaises(serializers.ValidationError):
            load(LaurentMatrixSerializer, {'n': 2, 'entries': [[[]]]})
