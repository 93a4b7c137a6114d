import json
import tempfile
from io import StringIO
from pathlib import Path

from django.apps import apps
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from arith.serializers import dump
from lattices.alpha import alpha
from lattices.serializers import LatticeSerializer
from loops.corpus import su2_loops
from loops.generators import power_loop
from loops.serializers import UnitaryLoopSerializer
from strata.corpus import chart_corpus
from strata.serializers import ChartSerializer

from .dispatch import run

LAMBDA_1 = {
    'matrix': {'n': 2, 'entries': [[[[1, '1/1', '0/1']], []], [[], [[-1, '1/1', '0/1']]]]},
    'r': 1,
    'group': 'SU2',
}
NOT_UNITARY = {
    'matrix': {'n': 2, 'entries': [[[[0, '2/1', '0/1']], []], [[], [[0, '1/1', '0/1']]]]},
    'r': 0,
    'group': 'SU2',
}


def _call(name, *args, **options):
    out = StringIO()
    call_command(name, *args, stdout=out, stderr=StringIO(), **options)
    return out.getvalue()


def _json(name, *args, **options):
    return json.loads(_call(name, *args, **options))


class DispatchTests(SimpleTestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.path = Path(self.tmp.name) / 'lambda1.json'
        self.path.write_text(json.dumps(LAMBDA_1))

    def _run(self, *argv):
        out, err = StringIO(), StringIO()
        code = run(list(argv), stdout=out, stderr=err)
        return code, out.getvalue(), err.getvalue()

    def test_check_loop_from_file(self):
        code, out, _ = self._run('check-loop', str(self.path), '--format', 'text')
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), 'valid Ω_poly,1 SU(2)')

    def test_roundtrip_text(self):
        code, out, _ = self._run('roundtrip', str(self.path), '--format', 'text')
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), 'beta(alpha(f)) == f: true')

    def test_invalid_loop_exits_one(self):
        code, _, err = self._run('check-loop', json.dumps(NOT_UNITARY))
        self.assertEqual(code, 1)
        self.assertIn('unitarity', err)

    def test_validation_error_exits_one(self):
        code, _, _ = self._run('check-loop', json.dumps({'r': 1}))
        self.assertEqual(code, 1)

    def test_usage_errors_exit_two(self):
        self.assertEqual(self._run('no-such-command')[0], 2)
        self.assertEqual(self._run()[0], 2)
        self.assertEqual(self._run('check-loop', str(self.path), '--format', 'xml')[0], 2)
        self.assertEqual(self._run('check-loop', str(Path(self.tmp.name) / 'missing.json'))[0], 2)

    def test_huge_window_exits_one(self):
        code, _, err = self._run('rank', json.dumps({'r': 10 ** 12, 'basis': []}))
        self.assertEqual(code, 1)
        self.assertIn('WindowTooLarge', err)

    def test_no_database_apps_installed(self):
        for label in ('django.contrib.auth', 'django.contrib.contenttypes'):
            self.assertFalse(apps.is_installed(label))
        self.assertTrue(apps.is_installed('rest_framework'))

    def test_ktheory(self):
        code, out, _ = self._run('ktheory', '--ring', 'RG', '--level', '2')
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual(report['even_rank'], 5)
        self.assertTrue(report['closed_form']['discrepant'])
        self.assertIn('note', report)


class LoopCommandTests(SimpleTestCase):
    def test_index(self):
        self.assertEqual(_json('index', json.dumps(LAMBDA_1))['index'], 0)
        payload = json.dumps(dump(UnitaryLoopSerializer, power_loop(-2)))
        self.assertEqual(_json('index', payload)['index'], 4)

    def test_act(self):
        g = [[['3/5', '0/1'], ['4/5', '0/1']], [['-4/5', '0/1'], ['3/5', '0/1']]]
        result = _json('act', json.dumps({'g': g, 'loop': LAMBDA_1}))
        self.assertEqual(result, dump(UnitaryLoopSerializer, su2_loops(1)[1]))

    def test_winding(self):
        payload = json.dumps({'poly': [[0, '1/1', '0/1'], [1, '-5/2', '0/1'], [2, '1/1', '0/1']]})
        result = _json('winding', payload, sample=True)
        self.assertEqual(result['winding'], 1)
        self.assertTrue(result['agree'])

    def test_winding_on_circle(self):
        with self.assertRaises(CommandError):
            _call('winding', json.dumps({'poly': [[0, '-1/1', '0/1'], [1, '1/1', '0/1']]}))

    def test_oracle_index(self):
        payload = json.dumps(dump(UnitaryLoopSerializer, power_loop(1)))
        result = _json('oracle_index', payload)
        self.assertEqual(result['loop_index'], -2)
        self.assertTrue(result['agree'])
        self.assertEqual(result['truncated'][0]['cokernel'], 1)


class LatticeCommandTests(SimpleTestCase):
    def test_alpha_then_invariants(self):
        lattice = _call('alpha', json.dumps(LAMBDA_1))
        self.assertEqual(json.loads(lattice)['basis'], [[['(-1, 2)', '1/1', '0/1']], [['(0, 2)', '1/1', '0/1']]])
        self.assertEqual(_json('rank', lattice)['rank'], 1)
        self.assertEqual(_json('level', lattice)['level'], 1)
        self.assertEqual(_json('pi', lattice)['pi'], [['0/1', '0/1'], ['1/1', '0/1']])

    def test_thom_round_trip(self):
        lattice = _call('alpha', json.dumps(dump(UnitaryLoopSerializer, su2_loops(2)[11])))
        point = _call('thom', lattice)
        self.assertEqual(json.loads(point)['r'], 2)
        self.assertEqual(_json('thom_inverse', point), json.loads(lattice))

    def test_beta_payload_and_roundtrip(self):
        lattice = _call('alpha', json.dumps(LAMBDA_1))
        scaled = _json('beta', lattice)
        self.assertEqual(set(scaled), {'nb', 'norms_sq'})
        self.assertEqual(_json('beta', lattice, represented=True), LAMBDA_1)
        self.assertEqual(_json('roundtrip', lattice, lattice=True), {'alpha(beta(W)) == W': True})

    def test_beta_eval(self):
        lattice = _call('alpha', json.dumps(LAMBDA_1))
        result = _json('beta', lattice, represented=True, point='z=i', bits=64)
        lo, hi = (float(x) for x in result['eval']['value'][0][0]['im'])
        self.assertTrue(lo <= 1.0 <= hi)

    def test_bad_eval_point(self):
        lattice = _call('alpha', json.dumps(LAMBDA_1))
        with self.assertRaises(CommandError):
            _call('beta', lattice, point='w=2')

    def test_rank_zero_pi_fails(self):
        lattice = json.dumps({'r': 1, 'basis': [[['(-1, 2)', '1/1', '0/1'], ['(0, 1)', '1/1', '0/1']], [['(0, 2)', '1/1', '0/1']]]})
        self.assertEqual(_json('rank', lattice)['rank'], 0)
        with self.assertRaises(CommandError):
            _call('pi', lattice)


class StrataCommandTests(SimpleTestCase):
    def test_section(self):
        result = _json('section', json.dumps({'r': 1, 'line': [['0/1', '0/1'], ['1/1', '0/1']]}))
        self.assertEqual(result, dump(LatticeSerializer, alpha(su2_loops(1)[0])))

    def test_phi_and_inverse(self):
        s, x = chart_corpus(seed=0, count=6, max_r=2)[5]
        chart = dump(ChartSerializer, (s, x))
        lattice = _call('phi', json.dumps(chart))
        request = {'lattice': json.loads(lattice), 'lambda': chart['lambda']}
        self.assertEqual(_json('phi_inv', json.dumps(request)), chart)

    def test_phi_membership(self):
        s, x = chart_corpus(seed=0, count=1, max_r=1)[0]
        result = _json('phi', json.dumps(dump(ChartSerializer, (s, x))), membership=True)
        self.assertTrue(result['in_U_lambda'])
        self.assertTrue(result['in_Sigma_lambda'])

    def test_homotopy_endpoint(self):
        s, x = chart_corpus(seed=0, count=4, max_r=2)[2]
        chart = json.dumps(dump(ChartSerializer, (s, x)))
        section = _json('section', json.dumps(dump(ChartSerializer, (s, x))['lambda']))
        self.assertEqual(_json('homotopy', chart, t='0'), section)


class BatchTests(SimpleTestCase):
    def test_jobs_keep_input_order(self):
        payloads = [json.dumps(dump(UnitaryLoopSerializer, f)) for f in su2_loops(2)[::4]]
        serial = _json('index', *payloads, jobs=1)
        parallel = _json('index', *payloads, jobs=3)
        self.assertEqual(serial, parallel)
        self.assertEqual(len(parallel), len(payloads))

    def test_gen_corpus_is_deterministic(self):
        first = _call('gen_corpus', max_r=2, seed=9, count=6)
        second = _call('gen_corpus', max_r=2, seed=9, count=6)
        self.assertEqual(first, second)
        corpus = json.loads(first)
        self.assertEqual(len(corpus['su2_loops']), 16)
        self.assertEqual(len(corpus['charts']), 6)
