from arith.serializers import dump, load
from cli.base import PayloadCommand
from lattices.serializers import LatticeSerializer, ThomPointSerializer
from lattices.thom import thom_coords


class Command(PayloadCommand):
    help = 'Thom coordinates of a lattice of F_2r'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--r', type=int, help='Filtration level r (default: the level of W)')

    def process(self, payload, options):
        w = load(LatticeSerializer, payload)
        r = options['r'] if options['r'] is not None else max(w.level(), 1)
        return dump(ThomPointSerializer, thom_coords(w, r))
