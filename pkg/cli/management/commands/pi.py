from arith.serializers import dump, load
from cli.base import PayloadCommand
from lattices.invariants import lambda_of, pi
from lattices.serializers import HomomorphismDataSerializer, LatticeSerializer


class Command(PayloadCommand):
    help = 'The line pi(W) and the homomorphism lambda_W of a lattice of positive rank'

    def process(self, payload, options):
        w = load(LatticeSerializer, payload)
        return {
            'pi': pi(w).to_list(),
            'lambda': dump(HomomorphismDataSerializer, lambda_of(w)),
        }
