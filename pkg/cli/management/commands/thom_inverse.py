from arith.serializers import dump, load
from cli.base import PayloadCommand
from lattices.serializers import LatticeSerializer, ThomPointSerializer
from lattices.thom import lattice_from_thom


class Command(PayloadCommand):
    help = 'The lattice of F_2r with the given Thom coordinates'

    def process(self, payload, options):
        p = load(ThomPointSerializer, payload)
        r = None if p.is_basepoint else p.r
        return dump(LatticeSerializer, lattice_from_thom(p, r))
