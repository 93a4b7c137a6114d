from django.test import SimpleTestCase

from arith.exceptions import DomainError

from .modules import (
    Ring, closed_form_report, decompose_over_rg, invariant_rank, k_limit_description, k_of_filtration,
    k_of_quotient, rank_over_rg, rank_table, spans_rt_over_rg, weyl_invariance_check,
)
from .rings import RGElement, RTElement, T, T_INV, V, invariants_to_rg, is_weyl_invariant, restrict_rg_to_rt, weyl_act


class RepresentationRingTests(SimpleTestCase):
    def test_restriction_of_v_squared(self):
        self.assertEqual(restrict_rg_to_rt(V ** 2), T ** 2 + 2 + T_INV ** 2)

    def test_invariants_back_to_rg(self):
        x = T ** 3 + T_INV ** 3 - 5
        self.assertTrue(is_weyl_invariant(x))
        self.assertEqual(restrict_rg_to_rt(invariants_to_rg(x)), x)

    def test_non_invariant_rejected(self):
        self.assertEqual(weyl_act(T), T_INV)
        with self.assertRaises(DomainError):
            invariants_to_rg(T)

    def test_rg_is_polynomial(self):
        with self.assertRaises(DomainError):
            RGElement(((-1, 1),))

    def test_integer_coefficients(self):
        with self.assertRaises(DomainError):
            RTElement(((0, 0.5),))

    def test_basis_one_and_t(self):
        p, q = decompose_over_rg(T_INV)
        self.assertEqual((p, q), (V, RGElement(((0, -1),))))
        for x in (T ** 4 - 3 * T_INV ** 2, T + 7, RTElement()):
            p, q = decompose_over_rg(x)
            self.assertEqual(restrict_rg_to_rt(p) + restrict_rg_to_rt(q) * T, x)


class ModuleRankTests(SimpleTestCase):
    def test_quotients(self):
        for r in range(1, 6):
            for ring in Ring:
                module = k_of_quotient(r, ring)
                self.assertEqual((module.even_rank, module.odd_rank), (2, 0))
        with self.assertRaises(DomainError):
            k_of_quotient(0, Ring.RG)

    def test_filtration_ranks(self):
        self.assertEqual([k_of_filtration(r, 'RG').even_rank for r in range(3)], [1, 3, 5])
        self.assertEqual(k_of_filtration(0, Ring.RG).even, ('F_0 = pt',))
        for r in range(1, 6):
            self.assertEqual(
                k_of_filtration(r, Ring.RG).even_rank, k_of_filtration(r - 1, Ring.RG).even_rank + 2,
            )

    def test_weyl_invariance(self):
        for r in range(4):
            self.assertTrue(weyl_invariance_check(k_of_filtration(r, Ring.RT), k_of_filtration(r, Ring.RG)))
        self.assertFalse(weyl_invariance_check(k_of_filtration(1, Ring.RT), k_of_filtration(2, Ring.RG)))
        with self.assertRaises(DomainError):
            weyl_invariance_check(k_of_filtration(1, Ring.RG), k_of_filtration(1, Ring.RG))

    def test_closed_form_discrepancy(self):
        self.assertFalse(closed_form_report(0)['discrepant'])
        report = closed_form_report(2)
        self.assertEqual((report['recursion_rank'], report['displayed_closed_form_rank']), (5, 3))
        self.assertTrue(report['discrepant'])

    def test_rank_table_and_limit(self):
        table = rank_table(3, Ring.RT)
        self.assertEqual([row['filtration_even_rank'] for row in table], [1, 3, 5, 7])
        self.assertNotIn('quotient_even_rank', table[0])
        limit = k_limit_description(Ring.RG, levels=2)
        self.assertEqual(limit['even']['truncation_ranks'], [1, 3, 5])
        self.assertEqual(limit['odd'], 0)

    def test_rt_over_rg_ranks(self):
        self.assertTrue(spans_rt_over_rg(6))
        for r in range(4):
            rt_mod = k_of_filtration(r, Ring.RT)
            self.assertEqual(rank_over_rg(rt_mod), 2 * (2 * r + 1))
            self.assertEqual(invariant_rank(rt_mod), k_of_filtration(r, Ring.RG).even_rank)
