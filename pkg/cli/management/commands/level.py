from arith.serializers import load
from cli.base import PayloadCommand
from lattices.invariants import filtration_level, index_of_lattice, rank
from lattices.serializers import LatticeSerializer


class Command(PayloadCommand):
    help = 'Filtration level of a lattice, reported next to its rank and index'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--raw', action='store_true', help='Accept spans of any index')

    def process(self, payload, options):
        w = load(LatticeSerializer, payload, raw=options['raw'])
        return {'level': filtration_level(w), 'rank': rank(w), 'index': index_of_lattice(w)}
