from arith.exceptions import RootOnCircleError
from arith.serializers import load
from circle.oracles import sampled_winding
from circle.serializers import WindingRequestSerializer
from circle.winding import winding_number
from cli.base import PayloadCommand, emit_json


class Command(PayloadCommand):
    help = 'Exact winding number of a Laurent polynomial around the unit circle'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--sample',
            action='store_true',
            help='Also run the certified sampling oracle and compare',
        )

    def process(self, payload, options):
        h = load(WindingRequestSerializer, payload)
        try:
            result = winding_number(h).to_dict()
        except RootOnCircleError as exc:
            self.stderr.write(emit_json({'root_on_circle': exc.certificate}))
            raise
        if options['sample']:
            sampled = sampled_winding(h)
            result['sampled'] = sampled
            result['agree'] = sampled == result['winding']
        return result
