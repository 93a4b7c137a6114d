from django.test import SimpleTestCase, override_settings
from rest_framework import serializers

from arith.exceptions import DimensionError, DomainError, InvariantViolation, WindowTooLarge
from arith.laurent import VectorLaurent
from arith.linalg import rank as matrix_rank
from arith.scalars import GaussianRational, ONE, ZERO
from arith.serializers import dump, load
from loops.corpus import product_loops, rotations, su2_loops, u2_loops
from loops.generators import lambda_matrix, power_loop
from loops.index import index_of_loop
from loops.unitary import GroupTag, check_poly_loop, conjugate_action

from .alpha import alpha
from .invariants import (
    filtration_level, index_of_lattice, k_lambda_window, kernel_basis, lambda_of,
    min_negative_degree, pi, rank, slot_image,
)
from .lattice import Lattice, WindowSpan, k_plus, lattice_from_generators, span_of
from .oracle import minimal_depth, truncated_operator
from .projective import HomomorphismData, ProjectivePoint
from .serializers import LatticeSerializer, ThomPointSerializer, parse_slot
from .thom import BASEPOINT, ThomPoint, lattice_from_thom, thom_coords


def _lambda(r):
    return check_poly_loop(lambda_matrix(r), r, GroupTag.SU2)


def _skew(a0):
    """W generated by z e_1 and a0 e_1 + z^-1 e_2: rank 0 but level 1."""
    vector = VectorLaurent.from_coefficient_map({-1: (ZERO, ONE), 0: (GaussianRational.coerce(a0), ZERO)})
    return span_of([vector], 1)


class AlphaTests(SimpleTestCase):
    def test_lambda_one_basis(self):
        w = alpha(_lambda(1))
        self.assertEqual(w.basis, ((ZERO, ONE, ZERO, ZERO), (ZERO, ZERO, ZERO, ONE)))

    def test_window_bound_below_degree(self):
        with self.assertRaises(DomainError):
            alpha(_lambda(2), r=1)

    def test_equal_across_windows(self):
        f = su2_loops(2)[3]
        self.assertEqual(alpha(f), alpha(f, r=3))
        self.assertEqual(hash(alpha(f)), hash(alpha(f, r=3)))

    def test_winding_loops_need_raw(self):
        with self.assertRaises(InvariantViolation):
            alpha(power_loop(1))
        self.assertEqual(alpha(power_loop(1), raw=True).dim, 1)

    def test_equivariance(self):
        for f in su2_loops(2):
            for g in rotations()[1:4]:
                self.assertEqual(alpha(conjugate_action(g, f)), alpha(f).act(g))


class LatticeTests(SimpleTestCase):
    def test_not_z_stable(self):
        with self.assertRaises(DomainError):
            WindowSpan(1, ((ZERO, ONE, ZERO, ZERO),))

    def test_index_zero_enforced(self):
        with self.assertRaises(InvariantViolation):
            Lattice(1, ())
        self.assertEqual(WindowSpan(1, ()).dim, 0)

    @override_settings(LOOPGRASS_MAX_WINDOW=8)
    def test_window_cap(self):
        with self.assertRaises(WindowTooLarge):
            alpha(_lambda(3))

    def test_generators_strict_and_raw(self):
        e1 = VectorLaurent.from_coefficient_map({0: (ONE, ZERO)})
        self.assertEqual(lattice_from_generators([e1], 1, raw=True).dim, 1)
        with self.assertRaises(InvariantViolation):
            lattice_from_generators([e1], 1)
        f = _lambda(2)
        self.assertEqual(lattice_from_generators(f.matrix.columns(), 2), alpha(f))

    def test_rewindow_down(self):
        w = alpha(_lambda(1), r=3)
        self.assertEqual(w.level(), 1)
        self.assertEqual(w.tight.r, 1)
        with self.assertRaises(DomainError):
            w.rewindow(0)


class InvariantTests(SimpleTestCase):
    def test_lambda_one(self):
        w = alpha(_lambda(1))
        self.assertEqual(index_of_lattice(w), 0)
        self.assertEqual(rank(w), 1)
        self.assertEqual(min_negative_degree(w), -1)
        self.assertEqual(filtration_level(w), 1)
        self.assertEqual(kernel_basis(w), [VectorLaurent.basis(1, -1)])
        self.assertEqual(pi(w), ProjectivePoint(0, 1))

    def test_kernel_basis_structure(self):
        for f in su2_loops(3):
            w = alpha(f)
            basis = kernel_basis(w)
            self.assertEqual(len(basis), f.degree_bound)
            self.assertEqual(basis[0].degree(), -f.degree_bound)
            for x, y in zip(basis, basis[1:]):
                self.assertEqual(x.shift(1), y)

    def test_rank_at_most_level(self):
        for f in su2_loops(3):
            w = alpha(f)
            self.assertLessEqual(rank(w), filtration_level(w))
        w = _skew(1)
        self.assertEqual((rank(w), filtration_level(w)), (0, 1))

    def test_rank_zero_has_no_pi(self):
        with self.assertRaises(DomainError):
            pi(_skew(1))
        self.assertTrue(lambda_of(_skew(1)).is_trivial)

    def test_pi_and_lambda_equivariance(self):
        f = _lambda(2)
        for g in rotations():
            moved = alpha(f).act(g)
            self.assertEqual(pi(moved), pi(alpha(f)).act(g))
            self.assertEqual(lambda_of(moved), lambda_of(alpha(f)).act(g))
            self.assertEqual(rank(moved), 2)
            self.assertEqual(filtration_level(moved), 2)

    def test_winding_index_matches_loop(self):
        for f in u2_loops(3) + su2_loops(1):
            self.assertEqual(index_of_loop(f), 2 * index_of_lattice(alpha(f, raw=True)))

    def test_rank_and_level_equivariance(self):
        for f in su2_loops(3)[::2] + product_loops()[::4]:
            w = alpha(f)
            for g in rotations()[1:4]:
                moved = alpha(conjugate_action(g, f))
                self.assertEqual(rank(moved), rank(w))
                self.assertEqual(filtration_level(moved), filtration_level(w))

    def test_slot_image(self):
        image = slot_image(alpha(_lambda(1)), 1)
        self.assertEqual(matrix_rank(image, 2), 1)
        self.assertIn((ZERO, ONE), image)
        image = slot_image(alpha(_lambda(1), r=2), 2)
        self.assertEqual(matrix_rank(image, 2), 0)

    def test_k_lambda_window(self):
        lam = lambda_of(alpha(_lambda(1)))
        self.assertEqual(k_lambda_window(lam), alpha(_lambda(1)))
        self.assertEqual(k_lambda_window(HomomorphismData.trivial(), 2), k_plus())


class ThomTests(SimpleTestCase):
    def test_skew_coordinates(self):
        p = thom_coords(_skew(3), 1)
        self.assertEqual(p.u0, (ZERO, ONE))
        self.assertEqual(p.fiber, ((GaussianRational(3), ZERO),))
        self.assertFalse(p.is_zero_section)

    def test_round_trip(self):
        lattices = [_skew(1), _skew(GaussianRational(1, 2))] + [alpha(f) for f in su2_loops(3)]
        for w in lattices:
            r = w.level()
            p = thom_coords(w, r)
            self.assertEqual(lattice_from_thom(p, r), w)

    def test_lower_level_is_basepoint(self):
        self.assertIs(thom_coords(alpha(_lambda(1), r=2), 2), BASEPOINT)
        self.assertIs(thom_coords(k_plus(), 1), BASEPOINT)

    def test_level_above_r(self):
        with self.assertRaises(DomainError):
            thom_coords(alpha(_lambda(2)), 1)

    def test_equivariance(self):
        w = alpha(su2_loops(2)[10])
        for g in rotations():
            self.assertEqual(thom_coords(w.act(g), 2), thom_coords(w, 2).act(g))

    def test_inverse_domain(self):
        with self.assertRaises(DomainError):
            lattice_from_thom(BASEPOINT, 1)
        with self.assertRaises(DimensionError):
            lattice_from_thom(ThomPoint((ZERO, ONE), ()), 2)

    def test_fiber_orthogonal_to_u0(self):
        with self.assertRaises(DomainError):
            ThomPoint((ZERO, ONE), ((ZERO, ONE),))


class OracleTests(SimpleTestCase):
    def test_winding_loop(self):
        operator = truncated_operator(power_loop(1), minimal_depth(1))
        self.assertEqual((operator.kernel_dimension, operator.cokernel_dimension), (0, 1))

    def test_lambda_one(self):
        operator = truncated_operator(_lambda(1), minimal_depth(1))
        self.assertEqual((operator.kernel_dimension, operator.cokernel_dimension), (1, 1))

    def test_concordance(self):
        loops = u2_loops(3) + su2_loops(1)
        self.assertGreaterEqual(len(loops), 20)
        for f in loops:
            depth = minimal_depth(f.degree_bound)
            for n in (depth, depth + 1):
                self.assertEqual(2 * truncated_operator(f, n).index, index_of_loop(f))

    def test_depth_too_small(self):
        with self.assertRaises(DomainError):
            truncated_operator(_lambda(2), 2)


class SerializerTests(SimpleTestCase):
    payload = {
        'r': 1,
        'basis': [
            [['(-1, 2)', '1/1', '0/1']],
            [['(0, 2)', '1/1', '0/1']],
        ],
    }

    def test_lattice_payload(self):
        w = load(LatticeSerializer, self.payload)
        self.assertEqual(w, alpha(_lambda(1)))
        self.assertEqual(dump(LatticeSerializer, w), self.payload)

    def test_slot_outside_window(self):
        payload = {'r': 1, 'basis': [[['(1, 1)', '1/1', '0/1']]]}
        with self.assertRaises(serializers.ValidationError):
            load(LatticeSerializer, payload)

    def test_huge_window_rejected_before_allocation(self):
        with self.assertRaises(WindowTooLarge):
            load(LatticeSerializer, {'r': 10 ** 12, 'basis': [[]]})

    def test_parse_slot(self):
        self.assertEqual(parse_slot('(-3, 2)'), (-3, 1))
        with self.assertRaises(ValueError):
            parse_slot('(0, 3)')

    def test_thom_payload(self):
        p = thom_coords(_skew(1), 1)
        data = dump(ThomPointSerializer, p)
        self.assertEqual(data['r'], 1)
        self.assertEqual(load(ThomPointSerializer, data), p)
        self.assertIs(load(ThomPointSerializer, {'basepoint': True}), BASEPOINT)
