"""
Rings app serializers.

These validate the JSON ring document before any algebra happens:
{"basis": [{"label", "degree"}], "unit", "products": [{"left", "right",
"value": [{"label", "coeff"}]}], "differential": [{"source", "value"}]}.
"""

from rest_framework import serializers

from apps.core.validators import BasisLabelValidator, RationalStringValidator, format_rational, parse_rational


class BasisEntrySerializer(serializers.Serializer):
    label = serializers.CharField(validators=[BasisLabelValidator()])
    degree = serializers.IntegerField(min_value=0)


class TermSerializer(serializers.Serializer):
    """
    One term of a linear combination. Coefficients are exact rational
    strings; plain integers are accepted.
    """
    label = serializers.CharField(validators=[BasisLabelValidator()])
    coeff = serializers.CharField(validators=[RationalStringValidator()], default='1')

    def to_internal_value(self, data):
        value = super().to_internal_value(data)
        value['coeff'] = parse_rational(value['coeff'])
        return value


def distinct_terms(value):
    """Each basis label appears at most once in a linear combination."""
    seen = set()
    for term in value:
        if term['label'] in seen:
            raise serializers.ValidationError(f"Term {term['label']!r} listed twice.")
        seen.add(term['label'])
    return value


class ProductSerializer(serializers.Serializer):
    left = serializers.CharField()
    right = serializers.CharField()
    value = TermSerializer(many=True)

    def validate_value(self, value):
        return distinct_terms(value)


class DifferentialSerializer(serializers.Serializer):
    source = serializers.CharField()
    value = TermSerializer(many=True)

    def validate_value(self, value):
        return distinct_terms(value)


class RingDocumentSerializer(serializers.Serializer):
    """
    Serializer for ring documents with schema-level validation.
    """
    name = serializers.CharField(required=False, allow_blank=True)
    basis = BasisEntrySerializer(many=True, allow_empty=False)
    unit = serializers.CharField()
    products = ProductSerializer(many=True, required=False, default=list)
    differential = DifferentialSerializer(many=True, required=False, default=list)

    def validate_basis(self, value):
        """Validate basis labels are distinct."""
        seen = set()
        for entry in value:
            if entry['label'] in seen:
                raise serializers.ValidationError(f"Duplicate basis label {entry['label']!r}.")
            seen.add(entry['label'])
        return value

    def validate_products(self, value):
        """Validate each ordered pair appears at most once."""
        seen = set()
        for entry in value:
            key = (entry['left'], entry['right'])
            if key in seen:
                raise serializers.ValidationError(f'Product {key} listed twice.')
            seen.add(key)
        return value

    def validate_differential(self, value):
        sources = [entry['source'] for entry in value]
        if len(sources) != len(set(sources)):
            raise serializers.ValidationError('Differential source listed twice.')
        return value


def _terms(vector_by_label):
    return [
        {'label': label, 'coeff': format_rational(coeff)}
        for label, coeff in vector_by_label.items()
    ]


def ring_to_document(ring):
    """Inverse of loading: the canonical JSON document of a ring."""
    document = {
        'basis': [
            {'label': label, 'degree': degree}
            for label, degree in zip(ring.labels, ring.degrees)
        ],
        'unit': ring.unit,
        'products': [
            {
                'left': ring.labels[i],
                'right': ring.labels[j],
                'value': _terms(ring.labelled(value)),
            }
            for (i, j), value in sorted(ring.products.items())
            if value and ring.unit_index not in (i, j)
        ],
    }
    if ring.name:
        document['name'] = ring.name
    if ring.is_dg:
        document['differential'] = [
            {'source': ring.labels[i], 'value': _terms(ring.labelled(value))}
            for i, value in sorted(ring.differential.items())
        ]
    return document
