from arith.serializers import load
from cli.base import PayloadCommand
from lattices.invariants import kernel_basis, min_negative_degree, rank
from lattices.serializers import LatticeSerializer


class Command(PayloadCommand):
    help = 'Rank dim(W ∩ K_-) of a lattice, with the kernel basis x, zx, ...'

    def process(self, payload, options):
        w = load(LatticeSerializer, payload)
        size = rank(w)
        result = {'rank': size, 'min_negative_degree': min_negative_degree(w)}
        if size:
            result['kernel_basis'] = [
                [poly.to_triples() for poly in vector.components] for vector in kernel_basis(w)
            ]
        return result
