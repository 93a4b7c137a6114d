from arith.serializers import dump, load
from cli.base import PayloadCommand
from lattices.invariants import rank
from lattices.serializers import LatticeSerializer
from strata.bundle import phi
from strata.charts import in_Sigma_lambda, in_U_lambda
from strata.serializers import ChartSerializer


class Command(PayloadCommand):
    help = 'The lattice phi(A, e) of chart coordinates {"lambda", "abcd", "fiber"}'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--membership',
            action='store_true',
            help='Also report membership in U_lambda and Sigma_lambda',
        )

    def process(self, payload, options):
        s, x = load(ChartSerializer, payload)
        w = phi(s, x)
        result = dump(LatticeSerializer, w)
        if not options['membership']:
            return result
        return {
            'lattice': result,
            'in_U_lambda': in_U_lambda(w, s.lam),
            'in_Sigma_lambda': in_Sigma_lambda(w, s.lam),
            'rank': rank(w),
        }
