from fractions import Fraction

from rest_framework import serializers

from arith.exceptions import LoopgrassError
from arith.serializers import LaurentMatrixSerializer

from .scaled import ScaledLoop


class RationalField(serializers.Field):
    default_error_messages = {'invalid': 'Expected a rational string such as "25/1".'}

    def to_representation(self, value):
        value = Fraction(value)
        return f"{value.numerator}/{value.denominator}"

    def to_internal_value(self, data):
        try:
            return Fraction(str(data))
        except (ValueError, ZeroDivisionError):
            self.fail('invalid')


class ScaledLoopSerializer(serializers.Serializer):
    """{"nb": matrix, "norms_sq": ["p/q", "p/q"]}."""

    nb = LaurentMatrixSerializer()
    norms_sq = serializers.ListField(child=RationalField(), min_length=2, max_length=2)

    def create(self, validated_data):
        nb = LaurentMatrixSerializer().create(validated_data['nb'])
        try:
            return ScaledLoop(nb, tuple(validated_data['norms_sq']))
        except LoopgrassError as exc:
            raise serializers.ValidationError(str(exc))

    def to_representation(self, instance):
        return {
            'nb': instance.nb.to_dict(),
            'norms_sq': [RationalField().to_representation(q) for q in instance.norms_sq],
        }
