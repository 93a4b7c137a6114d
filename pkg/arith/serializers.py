from rest_framework import serializers

from .laurent import LaurentMatrix, LaurentPoly
from .scalars import GaussianRational


class GaussianRationalField(serializers.Field):
    """A Gaussian rational as ["re_num/re_den", "im_num/im_den"]."""

    default_error_messages = {
        'invalid': 'Expected a pair of rational strings such as ["3/5", "0/1"].',
    }

    def to_representation(self, value):
        return GaussianRational.coerce(value).to_strings()

    def to_internal_value(self, data):
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            self.fail('invalid')
        try:
            return GaussianRational.from_strings(str(data[0]), str(data[1]))
        except (ValueError, ZeroDivisionError):
            self.fail('invalid')


class ConstantVectorField(serializers.ListField):
    """A vector of C^n as a list of Gaussian-rational pairs."""

    child = GaussianRationalField()

    def to_internal_value(self, data):
        return tuple(super().to_internal_value(data))


class LaurentPolyField(serializers.Field):
    """A Laurent polynomial as a list of [exponent, "re", "im"] triples."""

    default_error_messages = {
        'not_a_list': 'Expected a list of [exponent, re, im] triples.',
        'bad_term': 'Term {term!r} is not [integer exponent, "p/q", "p/q"].',
        'duplicate': 'Exponent {exponent} appears more than once.',
    }

    def to_representation(self, value):
        return LaurentPoly.coerce(value).to_triples()

    def to_internal_value(self, data):
        if not isinstance(data, (list, tuple)):
            self.fail('not_a_list')
        terms = {}
        for term in data:
            if (not isinstance(term, (list, tuple)) or len(term) != 3
                    or isinstance(term[0], bool) or not isinstance(term[0], int)):
                self.fail('bad_term', term=term)
            try:
                coefficient = GaussianRational.from_strings(str(term[1]), str(term[2]))
            except (ValueError, ZeroDivisionError):
                self.fail('bad_term', term=term)
            if term[0] in terms:
                self.fail('duplicate', exponent=term[0])
            terms[term[0]] = coefficient
        return LaurentPoly.from_dict(terms)


class LaurentMatrixSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    entries = serializers.ListField(child=serializers.ListField(child=LaurentPolyField()))

    def validate(self, attrs):
        n = attrs['n']
        rows = attrs['entries']
        if len(rows) != n or any(len(row) != n for row in rows):
            raise serializers.ValidationError(f"entries must be an {n}x{n} array")
        return attrs

    def create(self, validated_data):
        return LaurentMatrix(tuple(tuple(row) for row in validated_data['entries']))


def load(serializer_class, data, **context):
    """Validate ``data`` with ``serializer_class`` and build the domain value."""
    serializer = serializer_class(data=data, context=context)
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def dump(serializer_class, instance):
    return serializer_class(instance).data
