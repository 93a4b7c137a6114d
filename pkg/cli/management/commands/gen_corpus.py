from arith.serializers import dump
from cli.base import ReportCommand
from lattices.alpha import alpha
from lattices.serializers import LatticeSerializer
from loops.corpus import product_loops, su2_loops, u2_loops
from loops.serializers import UnitaryLoopSerializer
from strata.corpus import chart_corpus
from strata.serializers import ChartSerializer


class Command(ReportCommand):
    help = 'Emit the standard test corpus of loops, lattices and chart coordinates'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--max-r', type=int, default=3, help='Largest degree bound (default: 3)')
        parser.add_argument('--seed', type=int, default=0, help='Seed for the chart coordinates (default: 0)')
        parser.add_argument('--count', type=int, default=30, help='Number of charts (default: 30)')

    def report(self, options):
        max_r = options['max_r']
        su2 = su2_loops(max_r)
        charts = chart_corpus(seed=options['seed'], count=options['count'], max_r=min(max_r, 2))
        self.stderr.write(f"{len(su2)} SU(2) loops, {len(charts)} charts (seed {options['seed']})")
        return {
            'su2_loops': [dump(UnitaryLoopSerializer, f) for f in su2],
            'product_loops': [dump(UnitaryLoopSerializer, f) for f in product_loops()],
            'u2_loops': [dump(UnitaryLoopSerializer, f) for f in u2_loops(max_r)],
            'lattices': [dump(LatticeSerializer, alpha(f)) for f in su2],
            'charts': [dump(ChartSerializer, pair) for pair in charts],
        }
