from arith.serializers import dump, load
from cli.base import PayloadCommand
from strata.bundle import phi_inverse
from strata.serializers import ChartSerializer, PhiInverseRequestSerializer


class Command(PayloadCommand):
    help = 'Chart coordinates of a lattice of U_lambda, for a payload {"lattice", "lambda"}'

    def process(self, payload, options):
        w, lam = load(PhiInverseRequestSerializer, payload)
        return dump(ChartSerializer, phi_inverse(w, lam))
