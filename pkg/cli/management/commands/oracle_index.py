from arith.serializers import load
from cli.base import PayloadCommand
from lattices.alpha import alpha
from lattices.invariants import index_of_lattice
from lattices.oracle import minimal_depth, truncated_operator
from loops.index import index_of_loop
from loops.serializers import UnitaryLoopSerializer


class Command(PayloadCommand):
    help = 'Compare the loop index with truncated Toeplitz operators at depths N and N + 1'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--depth', type=int, help='Truncation depth N (default: the smallest stable one)')

    def process(self, payload, options):
        f = load(UnitaryLoopSerializer, payload)
        depth = options['depth'] if options['depth'] is not None else minimal_depth(f.degree_bound)
        operators = [truncated_operator(f, depth), truncated_operator(f, depth + 1)]
        loop_index = index_of_loop(f)
        lattice_index = index_of_lattice(alpha(f, raw=True))
        return {
            'loop_index': loop_index,
            'lattice_index': lattice_index,
            'truncated': [operator.to_dict() for operator in operators],
            'agree': all(f.n * op.index == loop_index for op in operators) and f.n * lattice_index == loop_index,
        }
