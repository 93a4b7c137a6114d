from arith.exceptions import LoopValidationError
from arith.serializers import load
from cli.base import PayloadCommand, emit_json
from loops.serializers import UnitaryLoopSerializer


class Command(PayloadCommand):
    help = 'Validate a loop payload as an element of Omega_poly,r of U(2) or SU(2)'

    def process(self, payload, options):
        try:
            f = load(UnitaryLoopSerializer, payload)
        except LoopValidationError as exc:
            self.stderr.write(emit_json({'violations': exc.violations}))
            raise
        return {
            'valid': True,
            'report': f.describe(),
            'r': f.degree_bound,
            'group': f.group_tag.value,
        }

    def as_text(self, result):
        if isinstance(result, list):
            return "\n".join(item['report'] for item in result)
        return result['report']
