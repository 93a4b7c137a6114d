from django.test import SimpleTestCase
from rest_framework import serializers

from arith.exceptions import DomainError, LoopValidationError
from arith.laurent import LaurentMatrix, LaurentPoly, Z
from arith.scalars import GaussianRational, I
from arith.serializers import dump, load
from lattices.projective import HomomorphismData, ProjectivePoint

from .corpus import product_loops, rotations, su2_loops, u2_loops
from .generators import generator_loop, lambda_loop, lambda_matrix, power_loop
from .index import index_of_loop
from .serializers import ActionSerializer, UnitaryLoopSerializer
from .unitary import ConstantUnitary, GroupTag, check_poly_loop, conjugate_action, loop_product

LAMBDA_1 = {
    'matrix': {'n': 2, 'entries': [[[[1, '1/1', '0/1']], []], [[], [[-1, '1/1', '0/1']]]]},
    'r': 1,
    'group': 'SU2',
}


class CheckPolyLoopTests(SimpleTestCase):
    def test_lambda_is_valid(self):
        f = check_poly_loop(lambda_matrix(1), 1, GroupTag.SU2)
        self.assertEqual(f.describe(), 'valid Ω_poly,1 SU(2)')

    def test_every_violation_is_listed(self):
        m = LaurentMatrix.diagonal(Z.shift(1), LaurentPoly.constant(1))
        with self.assertRaises(LoopValidationError) as ctx:
            check_poly_loop(m, 1, GroupTag.SU2)
        codes = {v['error'] for v in ctx.exception.violations}
        self.assertEqual(codes, {'support', 'determinant'})

    def test_basepoint(self):
        m = LaurentMatrix.diagonal(LaurentPoly.constant(-1), LaurentPoly.constant(-1))
        with self.assertRaises(LoopValidationError) as ctx:
            check_poly_loop(m, 0, GroupTag.SU2)
        self.assertEqual([v['error'] for v in ctx.exception.violations], ['basepoint'])

    def test_u2_loop_skips_determinant(self):
        f = power_loop(1)
        self.assertEqual(f.group_tag, GroupTag.U2)
        with self.assertRaises(LoopValidationError):
            check_poly_loop(f.matrix, 1, GroupTag.SU2)


class ConstantUnitaryTests(SimpleTestCase):
    def test_rotation_group_laws(self):
        g = ConstantUnitary.rotation(3, 4, 5)
        self.assertTrue(g.is_special)
        self.assertEqual(g.compose(g.inverse()), ConstantUnitary.identity())

    def test_su2_parametrization(self):
        g = ConstantUnitary.su2(GaussianRational(0, '3/5'), GaussianRational('4/5'))
        self.assertTrue(g.is_special)

    def test_non_unitary_rejected(self):
        with self.assertRaises(DomainError):
            ConstantUnitary(((1, 1), (0, 1)))

    def test_su2_loops_need_special_g(self):
        g = ConstantUnitary(((1, 0), (0, I)))
        with self.assertRaises(DomainError):
            conjugate_action(g, su2_loops(1)[0])


class IndexTests(SimpleTestCase):
    def test_winding_anchors(self):
        self.assertEqual(index_of_loop(power_loop(1)), -2)
        self.assertEqual(index_of_loop(power_loop(-2)), 4)
        for f in su2_loops(2):
            self.assertEqual(index_of_loop(f), 0)

    def test_conjugation_keeps_index(self):
        for f in u2_loops(2):
            k = f.matrix.det().hi
            self.assertEqual(index_of_loop(f), -2 * k)


class GeneratorTests(SimpleTestCase):
    def test_generator_loop_with_and_without_g(self):
        g = ConstantUnitary.rotation(3, 4, 5)
        line = ProjectivePoint.from_vector(g.apply((0, 1)))
        self.assertEqual(generator_loop(2, line), generator_loop(2, line, g))

    def test_lambda_loop(self):
        lam = HomomorphismData.from_line(1, ProjectivePoint(0, 1))
        self.assertEqual(lambda_loop(lam).matrix, LaurentMatrix.diagonal(Z, Z.shift(-2)))
        self.assertTrue(lambda_loop(HomomorphismData.trivial()).matrix.is_identity())

    def test_products_add_degree_bounds(self):
        f, g = su2_loops(1)[:2]
        self.assertEqual(loop_product(f, g).degree_bound, 2)


class CorpusTests(SimpleTestCase):
    def test_sizes(self):
        self.assertEqual(len(rotations()), 8)
        self.assertEqual(len(su2_loops(3)), 24)
        self.assertEqual(len(product_loops()), 28)
        self.assertEqual(len(u2_loops(3)), 19)


class SerializerTests(SimpleTestCase):
    def test_loop_payload(self):
        f = load(UnitaryLoopSerializer, LAMBDA_1)
        self.assertEqual(f.matrix, lambda_matrix(1))
        self.assertEqual(dump(UnitaryLoopSerializer, f), LAMBDA_1)

    def test_invalid_group(self):
        with self.assertRaises(serializers.ValidationError):
            load(UnitaryLoopSerializer, dict(LAMBDA_1, group='SO3'))

    def test_action_payload(self):
        g = ConstantUnitary.rotation(3, 4, 5)
        payload = {'g': g.to_list(), 'loop': LAMBDA_1}
        g_loaded, f = load(ActionSerializer, payload)
        self.assertEqual(g_loaded, g)
        self.assertEqual(conjugate_action(g_loaded, f), su2_loops(1)[1])
