from arith.serializers import load
from beta.scaled import beta, generated_lattice, scaled_loop_equals
from cli.base import PayloadCommand
from lattices.alpha import alpha
from lattices.serializers import LatticeSerializer
from loops.serializers import UnitaryLoopSerializer


class Command(PayloadCommand):
    help = 'Check beta(alpha(f)) == f for a loop, or alpha(beta(W)) == W for a lattice'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--lattice',
            action='store_true',
            help='The payload is a lattice; check alpha(beta(W)) == W',
        )

    def process(self, payload, options):
        if options['lattice']:
            w = load(LatticeSerializer, payload)
            return {'alpha(beta(W)) == W': generated_lattice(beta(w), w.r) == w}
        f = load(UnitaryLoopSerializer, payload)
        return {'beta(alpha(f)) == f': scaled_loop_equals(beta(alpha(f)), f)}
