from arith.serializers import load
from circle.winding import winding_number
from cli.base import PayloadCommand
from loops.index import index_of_loop
from loops.serializers import UnitaryLoopSerializer


class Command(PayloadCommand):
    help = 'Index of (M_f)_++ for a loop, with the winding of det f'

    def process(self, payload, options):
        f = load(UnitaryLoopSerializer, payload)
        return {
            'index': index_of_loop(f),
            'det_winding': winding_number(f.matrix.det()).to_dict(),
        }
