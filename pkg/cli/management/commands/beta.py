import re
from fractions import Fraction

from django.conf import settings
from django.core.management.base import CommandError

from arith.scalars import GaussianRational
from arith.serializers import dump, load
from beta.scaled import beta, evaluate_scaled_loop, represented_loop
from beta.serializers import ScaledLoopSerializer
from cli.base import PayloadCommand
from lattices.serializers import LatticeSerializer
from loops.serializers import UnitaryLoopSerializer

_RATIONAL = r'[+-]?\d+(?:/\d+)?'
_PAIR = re.compile(rf'^({_RATIONAL}),({_RATIONAL})$')


def parse_point(text):
    """``z=i``, ``z=-1``, ``z=3/5,4/5`` (re,im) or ``turns=1/8``."""
    key, _, value = text.replace(' ', '').partition('=')
    if key == 'turns':
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise CommandError(f"bad turn count {value!r}", returncode=2)
    if key != 'z':
        raise CommandError(f"--eval expects z=... or turns=..., got {text!r}", returncode=2)
    units = {'i': GaussianRational(0, 1), '+i': GaussianRational(0, 1), '-i': GaussianRational(0, -1)}
    if value in units:
        return units[value]
    match = _PAIR.match(value)
    try:
        if match:
            return GaussianRational(Fraction(match.group(1)), Fraction(match.group(2)))
        return GaussianRational(Fraction(value))
    except (ValueError, ZeroDivisionError):
        raise CommandError(f"bad point {value!r}", returncode=2)


class Command(PayloadCommand):
    help = 'The scaled loop Ñ of a lattice, optionally evaluated on the circle'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--represented',
            action='store_true',
            help='Emit the exact loop Ñ(z) Ñ(1)^-1 instead of Ñ',
        )
        parser.add_argument('--eval', dest='point', help='z=i, z=re,im or turns=p/q')
        parser.add_argument(
            '--bits',
            type=int,
            default=settings.LOOPGRASS_DEFAULT_BITS,
            help='Enclosure precision in bits (default: LOOPGRASS_DEFAULT_BITS)',
        )

    def process(self, payload, options):
        s = beta(load(LatticeSerializer, payload))
        if options['represented']:
            result = dump(UnitaryLoopSerializer, represented_loop(s))
        else:
            result = dump(ScaledLoopSerializer, s)
        if options['point'] is None:
            return result
        point = parse_point(options['point'])
        return {
            'scaled_loop': result,
            'eval': {
                'point': options['point'],
                'bits': options['bits'],
                'value': evaluate_scaled_loop(s, point, options['bits']),
            },
        }
