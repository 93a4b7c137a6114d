from rest_framework import serializers

from arith.serializers import LaurentPolyField


class WindingRequestSerializer(serializers.Serializer):
    """{"poly": [[exponent, re, im], ...]}."""

    poly = LaurentPolyField()

    def validate_poly(self, value):
        if value.is_zero:
            raise serializers.ValidationError("the zero polynomial has no winding number")
        return value

    def create(self, validated_data):
        return validated_data['poly']
