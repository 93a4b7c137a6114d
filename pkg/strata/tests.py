import random
from fractions import Fraction

from django.test import SimpleTestCase

from arith.exceptions import DimensionError, DomainError
from arith.laurent import POLY_ONE, LaurentPoly, VectorLaurent
from arith.scalars import GaussianRational, ONE, ZERO
from arith.serializers import dump, load
from lattices.alpha import alpha
from lattices.invariants import filtration_level, lambda_of, pi, rank
from lattices.lattice import span_of
from lattices.projective import HomomorphismData, ProjectivePoint
from loops.corpus import rotations, su2_loops
from loops.generators import lambda_loop

from .bundle import act_on_chart, phi, phi_inverse, stratum_lattice
from .charts import in_Sigma_lambda, in_U_lambda, lambda_from_line, section_s_r
from .corpus import chart_corpus, lines, stratum_data
from .data import FiberVector, StratumData, determinant_polynomial
from .homotopy import homotopy_H
from .serializers import ChartSerializer, PhiInverseRequestSerializer

E2 = ProjectivePoint(0, 1)


def _skew(a0):
    vector = VectorLaurent.from_coefficient_map({-1: (ZERO, ONE), 0: (GaussianRational.coerce(a0), ZERO)})
    return span_of([vector], 1)


class StratumDataTests(SimpleTestCase):
    def test_balanced_family_is_unimodular(self):
        rng = random.Random(7)
        for r in (1, 2, 3):
            lam = HomomorphismData.from_line(r, E2)
            s = stratum_data(lam, 'balanced', rng)
            self.assertEqual(determinant_polynomial(s), POLY_ONE)

    def test_root_inside_rejected(self):
        lam = HomomorphismData.from_line(1, E2)
        with self.assertRaises(DomainError):
            StratumData(lam, a=LaurentPoly.constant(-2))

    def test_root_on_circle_rejected(self):
        lam = HomomorphismData.from_line(1, E2)
        with self.assertRaises(DomainError):
            StratumData(lam, a=LaurentPoly.constant(-1))

    def test_trivial_homomorphism_rejected(self):
        with self.assertRaises(DomainError):
            StratumData(HomomorphismData.trivial())

    def test_fiber_length(self):
        with self.assertRaises(DimensionError):
            phi(StratumData(HomomorphismData.from_line(2, E2)), FiberVector.zero(1))


class ChartTests(SimpleTestCase):
    def test_section_is_lambda_lattice(self):
        for x in lines():
            for r in (1, 2):
                self.assertEqual(section_s_r(x, r), alpha(lambda_loop(lambda_from_line(r, x))))

    def test_skew_lattice(self):
        w = _skew(1)
        lam = lambda_from_line(1, E2)
        self.assertTrue(in_U_lambda(w, lam))
        self.assertFalse(in_Sigma_lambda(w, lam))

    def test_section_lies_in_sigma(self):
        for x in lines():
            lam = lambda_from_line(2, x)
            self.assertTrue(in_Sigma_lambda(section_s_r(x, 2), lam))

    def test_section_needs_positive_r(self):
        with self.assertRaises(DomainError):
            section_s_r(E2, 0)


class BundleTests(SimpleTestCase):
    def test_skew_chart(self):
        lam = lambda_from_line(1, E2)
        for a0 in (1, 5, GaussianRational(Fraction(1, 2), 1)):
            data, fiber = phi_inverse(_skew(a0), lam)
            self.assertTrue(data.is_identity)
            self.assertEqual(fiber.coefficients, (GaussianRational.coerce(a0),))

    def test_identity_data_shears_into_skew_lattice(self):
        lam = lambda_from_line(1, E2)
        for a0 in (1, 5, -3, GaussianRational(0, 2)):
            self.assertEqual(phi(StratumData(lam), FiberVector((a0,))), _skew(a0))

    def test_chart_basis_is_special_unitary(self):
        for x in lines():
            lam = lambda_from_line(1, x)
            u, v = lam.u, lam.v
            determinant = u[0] * v[1] - v[0] * u[1]
            self.assertTrue(determinant.im == 0 and determinant.re > 0, str(x))
        self.assertEqual(lambda_from_line(1, E2).u, (ONE, ZERO))

    def test_round_trip(self):
        pairs = chart_corpus(seed=0, count=30, max_r=2)
        self.assertEqual(len(pairs), 30)
        for s, x in pairs:
            w = phi(s, x)
            self.assertEqual(phi_inverse(w, s.lam), (s, x))

    def test_zero_section_in_sigma(self):
        for s, x in chart_corpus(seed=1, count=12, max_r=2):
            w = phi(s, x)
            self.assertTrue(in_U_lambda(w, s.lam))
            if x.is_zero:
                self.assertTrue(in_Sigma_lambda(w, s.lam))
            else:
                self.assertFalse(in_Sigma_lambda(w, s.lam))
                self.assertLess(rank(w), s.r)

    def test_equivariance(self):
        for s, x in chart_corpus(seed=2, count=8, max_r=2):
            for g in rotations()[1:4]:
                self.assertEqual(phi(*act_on_chart(g, s, x)), phi(s, x).act(g))

    def test_not_in_chart(self):
        lam = lambda_from_line(1, E2)
        other = lambda_from_line(1, ProjectivePoint(1, 0))
        with self.assertRaises(DomainError):
            phi_inverse(section_s_r(E2, 1), other)
        with self.assertRaises(DomainError):
            phi_inverse(section_s_r(E2, 1), HomomorphismData.trivial())
        self.assertEqual(phi_inverse(section_s_r(E2, 1), lam)[0], StratumData(lam))


class HomotopyTests(SimpleTestCase):
    def test_endpoints(self):
        for s, _ in chart_corpus(seed=3, count=10, max_r=2):
            w = stratum_lattice(s)
            self.assertEqual(homotopy_H(s, 1, w), w)
            self.assertEqual(homotopy_H(s, 0), section_s_r(s.lam.line, s.r))

    def test_intermediate_stays_in_sigma(self):
        for s, _ in chart_corpus(seed=4, count=6, max_r=2):
            w = homotopy_H(s, Fraction(1, 2))
            self.assertTrue(in_Sigma_lambda(w, s.lam))

    def test_t_outside_interval(self):
        s = StratumData(lambda_from_line(1, E2))
        with self.assertRaises(DomainError):
            homotopy_H(s, Fraction(3, 2))


class SerializerTests(SimpleTestCase):
    def test_chart_payload(self):
        s, x = chart_corpus(seed=5, count=4, max_r=2)[3]
        data = dump(ChartSerializer, (s, x))
        self.assertEqual(load(ChartSerializer, data), (s, x))

    def test_phi_inverse_request(self):
        payload = {
            'lattice': {'r': 1, 'basis': [[['(-1, 2)', '1/1', '0/1'], ['(0, 1)', '1/1', '0/1']], [['(0, 2)', '1/1', '0/1']]]},
            'lambda': {'r': 1, 'line': [['0/1', '0/1'], ['1/1', '0/1']]},
        }
        w, lam = load(PhiInverseRequestSerializer, payload)
        self.assertEqual(w, _skew(1))
        self.assertEqual(lam, lambda_from_line(1, E2))


def _corpus_lattices():
    lattices = [alpha(f) for f in su2_loops(2)] + [_skew(1), _skew(GaussianRational(0, 1))]
    lattices += [phi(s, x) for s, x in chart_corpus(seed=8, count=8, max_r=2)]
    return lattices


def _candidate_lines(w):
    candidates = list(lines())
    if rank(w) > 0 and pi(w) not in candidates:
        candidates.append(pi(w))
    return candidates


class StratificationTests(SimpleTestCase):
    def test_pushout_coverage(self):
        for w in _corpus_lattices():
            level = filtration_level(w)
            for r in range(max(level, 1), level + 2):
                covered = any(in_U_lambda(w, lambda_from_line(r, x)) for x in _candidate_lines(w))
                self.assertTrue(covered or rank(w) <= r - 1, f"{w} at r={r}")

    def test_sigma_matches_zero_fiber_charts(self):
        pairs = []
        for f in su2_loops(2):
            w = alpha(f)
            across = ProjectivePoint.from_vector(pi(w).orthogonal_vector())
            pairs += [(w, lambda_of(w)), (w, lambda_from_line(f.degree_bound, across))]
        pairs += [(phi(s, x), s.lam) for s, x in chart_corpus(seed=8, count=8, max_r=2)]
        pairs += [(_skew(a0), lambda_from_line(1, E2)) for a0 in (0, 1, 4)]
        for w, lam in pairs:
            try:
                _, fiber = phi_inverse(w, lam)
                presented = fiber.is_zero
            except DomainError:
                presented = False
            self.assertEqual(presented, in_Sigma_lambda(w, lam), f"{w} over {lam}")
