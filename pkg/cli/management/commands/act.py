from arith.serializers import dump, load
from cli.base import PayloadCommand
from loops.serializers import ActionSerializer, UnitaryLoopSerializer
from loops.unitary import conjugate_action


class Command(PayloadCommand):
    help = 'Conjugate a loop by a constant unitary: z -> g f(z) g^-1'

    def process(self, payload, options):
        g, f = load(ActionSerializer, payload)
        return dump(UnitaryLoopSerializer, conjugate_action(g, f))
