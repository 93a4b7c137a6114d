from arith.serializers import dump, load
from cli.base import PayloadCommand
from lattices.serializers import HomomorphismDataSerializer, LatticeSerializer
from strata.charts import section_s_r


class Command(PayloadCommand):
    help = 'The section s_r(x) = W_{z^r u, z^-r v} for a payload {"r", "line"}'

    def process(self, payload, options):
        lam = load(HomomorphismDataSerializer, payload)
        return dump(LatticeSerializer, section_s_r(lam.line, lam.r))
