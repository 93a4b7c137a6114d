from fractions import Fraction

from arith.serializers import dump, load
from cli.base import PayloadCommand
from lattices.serializers import LatticeSerializer
from strata.homotopy import homotopy_H
from strata.serializers import ChartSerializer


class Command(PayloadCommand):
    help = 'The lattice H_t(A)(z) = A(z / t) of the zero section of a chart'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--t', type=Fraction, default=Fraction(1), help='Rational t in [0, 1] (default: 1)')

    def process(self, payload, options):
        s, _ = load(ChartSerializer, payload)
        return dump(LatticeSerializer, homotopy_H(s, options['t']))
