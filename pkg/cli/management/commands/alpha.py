from arith.serializers import dump, load
from cli.base import PayloadCommand
from lattices.alpha import alpha
from lattices.serializers import LatticeSerializer
from loops.serializers import UnitaryLoopSerializer


class Command(PayloadCommand):
    help = 'The lattice f K_+ of a loop, as a window basis'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--r', type=int, help='Window bound (default: the loop degree bound)')
        parser.add_argument(
            '--raw',
            action='store_true',
            help='Skip the index-0 check, for U(2) loops whose determinant winds',
        )

    def process(self, payload, options):
        f = load(UnitaryLoopSerializer, payload)
        return dump(LatticeSerializer, alpha(f, options['r'], raw=options['raw']))
