from rest_framework import serializers

from arith.exceptions import LoopgrassError
from arith.laurent import LaurentPoly
from arith.serializers import ConstantVectorField, GaussianRationalField
from lattices.serializers import HomomorphismDataSerializer, LatticeSerializer

from .data import FiberVector, StratumData


def _coefficients(poly):
    if poly.is_zero:
        return []
    return [c.to_strings() for c in poly.coefficients(0, poly.hi)]


class ChartSerializer(serializers.Serializer):
    """{"lambda": {"r", "line"}, "abcd": [a, b, c, d], "fiber": [e_0, ...]}.

    a, b, c and d are coefficient lists in ascending powers of w = z^-1.
    """

    abcd = serializers.ListField(
        child=ConstantVectorField(allow_empty=True), min_length=4, max_length=4, required=False,
    )
    fiber = serializers.ListField(child=GaussianRationalField(), required=False)

    def get_fields(self):
        fields = super().get_fields()
        fields['lambda'] = HomomorphismDataSerializer()
        return fields

    def validate(self, attrs):
        if attrs['lambda']['r'] < 1:
            raise serializers.ValidationError("chart coordinates need r > 0")
        return attrs

    def create(self, validated_data):
        lam = HomomorphismDataSerializer().create(validated_data['lambda'])
        polys = [LaurentPoly.from_coefficients(c) for c in validated_data.get('abcd', [[]] * 4)]
        try:
            data = StratumData(lam, *polys)
        except LoopgrassError as exc:
            raise serializers.ValidationError(str(exc))
        values = validated_data.get('fiber')
        x = FiberVector.zero(lam.r) if values is None else FiberVector(tuple(values))
        return data, x

    def to_representation(self, instance):
        data, x = instance
        return {
            'lambda': HomomorphismDataSerializer(data.lam).data,
            'abcd': [_coefficients(getattr(data, name)) for name in 'abcd'],
            'fiber': [c.to_strings() for c in x.coefficients],
        }


class PhiInverseRequestSerializer(serializers.Serializer):
    """{"lattice": lattice-payload, "lambda": {"r", "line"}}."""

    lattice = LatticeSerializer()

    def get_fields(self):
        fields = super().get_fields()
        fields['lambda'] = HomomorphismDataSerializer()
        return fields

    def create(self, validated_data):
        w = LatticeSerializer(context=self.context).create(validated_data['lattice'])
        lam = HomomorphismDataSerializer().create(validated_data['lambda'])
        return w, lam
