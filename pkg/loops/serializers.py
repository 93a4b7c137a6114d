from rest_framework import serializers

from arith.exceptions import DomainError
from arith.serializers import ConstantVectorField, LaurentMatrixSerializer

from .unitary import ConstantUnitary, GroupTag, check_poly_loop


class UnitaryLoopSerializer(serializers.Serializer):
    """{"matrix": {"n", "entries"}, "r": r, "group": "U2" | "SU2"}.

    ``save()`` runs the full loop check, so an invalid matrix surfaces as a
    LoopValidationError listing every failed invariant.
    """

    matrix = LaurentMatrixSerializer()
    r = serializers.IntegerField(min_value=0)
    group = serializers.ChoiceField(choices=[tag.value for tag in GroupTag], default=GroupTag.SU2.value)

    def create(self, validated_data):
        matrix = LaurentMatrixSerializer().create(validated_data['matrix'])
        return check_poly_loop(matrix, validated_data['r'], validated_data['group'])

    def to_representation(self, instance):
        return {
            'matrix': instance.matrix.to_dict(),
            'r': instance.degree_bound,
            'group': instance.group_tag.value,
        }


class ConstantUnitaryField(serializers.ListField):
    """A constant unitary as a list of rows of Gaussian-rational pairs."""

    child = ConstantVectorField()

    def to_representation(self, value):
        return value.to_list()

    def to_internal_value(self, data):
        rows = super().to_internal_value(data)
        if any(len(row) != len(rows) for row in rows):
            raise serializers.ValidationError("g must be a square matrix")
        try:
            return ConstantUnitary(tuple(rows))
        except DomainError as exc:
            raise serializers.ValidationError(str(exc))


class ActionSerializer(serializers.Serializer):
    """{"g": [[...], [...]], "loop": loop-payload}."""

    g = ConstantUnitaryField()
    loop = UnitaryLoopSerializer()

    def create(self, validated_data):
        return validated_data['g'], UnitaryLoopSerializer().create(validated_data['loop'])
