import re

from rest_framework import serializers

from arith.scalars import GaussianRational, ZERO
from arith.serializers import ConstantVectorField

from .lattice import Lattice, WindowSpan
from .projective import HomomorphismData, ProjectivePoint
from .thom import BASEPOINT, ThomPoint
from .window import check_window, slot, slot_key

_SLOT = re.compile(r'^\(\s*(-?\d+)\s*,\s*([12])\s*\)$')


def format_slot(exponent, component):
    """Slot key "(exponent, component)" with a 1-based component."""
    return f"({exponent}, {component + 1})"


def vector_triples(row, lo):
    triples = []
    for index, x in enumerate(row):
        if not x.is_zero:
            exponent, component = slot_key(index, lo)
            triples.append([format_slot(exponent, component), *x.to_strings()])
    return triples


def parse_slot(text):
    match = _SLOT.match(str(text))
    if not match:
        raise ValueError(f"bad slot {text!r}")
    return int(match.group(1)), int(match.group(2)) - 1


class WindowVectorField(serializers.Field):
    """A window vector as sparse [slot, "re", "im"] triples."""

    default_error_messages = {
        'invalid': 'Expected a list of ["(exponent, component)", re, im] triples.',
    }

    def to_representation(self, value):
        return vector_triples(value, self.context.get('lo', 0))

    def to_internal_value(self, data):
        if not isinstance(data, (list, tuple)):
            self.fail('invalid')
        entries = {}
        for term in data:
            if not isinstance(term, (list, tuple)) or len(term) != 3:
                self.fail('invalid')
            try:
                key = parse_slot(term[0])
                entries[key] = GaussianRational.from_strings(str(term[1]), str(term[2]))
            except (ValueError, ZeroDivisionError):
                self.fail('invalid')
        return entries


class LatticeSerializer(serializers.Serializer):
    """{"r": r, "basis": [[["(exponent, component)", re, im], ...], ...]}."""

    r = serializers.IntegerField(min_value=0)
    basis = serializers.ListField(child=WindowVectorField(), allow_empty=True)

    def validate(self, attrs):
        r = attrs['r']
        check_window(4 * r)
        rows = []
        for entries in attrs['basis']:
            row = [ZERO] * (4 * r)
            for (exponent, component), x in entries.items():
                if not -r <= exponent < r:
                    raise serializers.ValidationError(f"slot ({exponent}, {component + 1}) lies outside the window of bound {r}")
                row[slot(exponent, component, -r)] = x
            rows.append(tuple(row))
        attrs['rows'] = tuple(rows)
        return attrs

    def create(self, validated_data):
        cls = WindowSpan if self.context.get('raw') else Lattice
        return cls(validated_data['r'], validated_data['rows'])

    def to_representation(self, instance):
        return {
            'r': instance.r,
            'basis': [vector_triples(row, instance.lo) for row in instance.basis],
        }


class ProjectivePointField(serializers.Field):
    default_error_messages = {'invalid': 'Expected [[re, im], [re, im]], not both zero.'}

    def to_representation(self, value):
        return value.to_list()

    def to_internal_value(self, data):
        vector = ConstantVectorField(min_length=2, max_length=2).run_validation(data)
        if all(x.is_zero for x in vector):
            self.fail('invalid')
        return ProjectivePoint.from_vector(vector)


class HomomorphismDataSerializer(serializers.Serializer):
    r = serializers.IntegerField(min_value=0)
    line = ProjectivePointField(required=False, allow_null=True)

    def validate(self, attrs):
        if attrs['r'] > 0 and attrs.get('line') is None:
            raise serializers.ValidationError("a positive rank needs a line")
        if attrs['r'] == 0 and attrs.get('line') is not None:
            raise serializers.ValidationError("the trivial homomorphism has no line")
        return attrs

    def create(self, validated_data):
        return HomomorphismData.from_line(validated_data['r'], validated_data.get('line'))

    def to_representation(self, instance):
        if instance.is_trivial:
            return {'r': 0, 'line': None}
        return {
            'r': instance.r,
            'line': instance.line.to_list(),
            'u': [x.to_strings() for x in instance.u],
            'v': [x.to_strings() for x in instance.v],
        }


class ThomPointSerializer(serializers.Serializer):
    """{"basepoint": true} or {"u0": vector, "fiber": [vector, ...]}."""

    basepoint = serializers.BooleanField(required=False, default=False)
    u0 = ConstantVectorField(required=False, min_length=2, max_length=2)
    fiber = serializers.ListField(
        child=ConstantVectorField(min_length=2, max_length=2), required=False, default=list,
    )

    def validate(self, attrs):
        if attrs.get('basepoint'):
            return attrs
        if 'u0' not in attrs:
            raise serializers.ValidationError("u0 is required unless basepoint is true")
        if len(attrs['fiber']) % 2 == 0:
            raise serializers.ValidationError("the fiber has 2r - 1 entries")
        return attrs

    def create(self, validated_data):
        if validated_data.get('basepoint'):
            return BASEPOINT
        return ThomPoint(validated_data['u0'], tuple(validated_data['fiber']))

    def to_representation(self, instance):
        if instance.is_basepoint:
            return {'basepoint': True}
        return {
            'basepoint': False,
            'r': instance.r,
            'u0': [x.to_strings() for x in instance.u0],
            'fiber': [[x.to_strings() for x in u] for u in instance.fiber],
            'zero_section': instance.is_zero_section,
        }
