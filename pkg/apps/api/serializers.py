"""
API request serializers.

Ring, space and group documents are passed through as JSON objects and
validated by their own loaders.
"""

from django.conf import settings
from rest_framework import serializers

from apps.core.exceptions import ParseError
from apps.lie.generators import Truncation


class WindowSerializer(serializers.Serializer):
    """Truncation window; defaults come from the MALCEV settings."""
    max_degree = serializers.IntegerField(min_value=2, required=False)
    max_weight = serializers.IntegerField(min_value=1, required=False)

    def truncation(self):
        data = self.validated_data
        return Truncation(
            data.get('max_degree', settings.MALCEV['MAX_DEGREE']),
            data.get('max_weight', settings.MALCEV['MAX_WEIGHT']),
        )


class RingRequestSerializer(WindowSerializer):
    ring = serializers.JSONField()

    def validate_ring(self, value):
        if not isinstance(value, dict):
            raise serializers.ValidationError('Expected a ring document object.')
        return value


class CohomologyRequestSerializer(serializers.Serializer):
    space = serializers.JSONField()
    group = serializers.JSONField(required=False)
    monodromy = serializers.JSONField(required=False)

    def validate_space(self, value):
        if not isinstance(value, dict):
            raise serializers.ValidationError('Expected a space document object.')
        return value

    def validate_monodromy(self, value):
        if isinstance(value, str) and value in ('trivial', 'nontrivial'):
            return value
        if isinstance(value, dict) and all(isinstance(v, str) for v in value.values()):
            return value
        raise serializers.ValidationError('Expected "trivial", "nontrivial" or an edge to element map.')

    def validate(self, attrs):
        if 'monodromy' in attrs and 'group' not in attrs:
            raise serializers.ValidationError({'group': ['A monodromy needs a group document.']})
        return attrs


def validated(serializer_class, data):
    """Run a request serializer, raising ParseError with its field errors."""
    serializer = serializer_class(data=data)
    if not serializer.is_valid():
        raise ParseError('Request is not well-formed.', field_errors=serializer.errors)
    return serializer
