"""
Simplicial app serializers.

Space document: {"dimensions": [[labels per dimension]], "faces":
{"simplex": [{"degeneracies": [int], "target": str}]}, "basepoint"?}.
Group document: {"elements", "table"} or {"permutations"}, with optional
"generators", "kind" and "characters".
"""

from rest_framework import serializers

from apps.core.validators import BasisLabelValidator, RationalStringValidator, parse_rational


class FaceSerializer(serializers.Serializer):
    degeneracies = serializers.ListField(child=serializers.IntegerField(min_value=0), required=False, default=list)
    target = serializers.CharField()

    def validate_degeneracies(self, value):
        if any(a <= b for a, b in zip(value, value[1:])):
            raise serializers.ValidationError('Degeneracy indices must be strictly decreasing.')
        return value


class SpaceDocumentSerializer(serializers.Serializer):
    """
    Serializer for space documents with schema-level validation.
    """
    name = serializers.CharField(required=False, allow_blank=True)
    dimensions = serializers.ListField(
        child=serializers.ListField(child=serializers.CharField(validators=[BasisLabelValidator()])),
        allow_empty=False,
    )
    faces = serializers.DictField(child=FaceSerializer(many=True), required=False, default=dict)
    basepoint = serializers.CharField(required=False)

    def validate_dimensions(self, value):
        seen = set()
        for labels in value:
            for label in labels:
                if label in seen:
                    raise serializers.ValidationError(f'Duplicate simplex label {label!r}.')
                seen.add(label)
        if not value[0]:
            raise serializers.ValidationError('A space needs at least one vertex.')
        return value

    def validate(self, attrs):
        dimension_of = {
            label: n for n, labels in enumerate(attrs['dimensions']) for label in labels
        }
        faces = attrs['faces']
        for label, n in dimension_of.items():
            if n and label not in faces:
                raise serializers.ValidationError({'faces': f'Missing faces for {label!r}.'})
        for label, entries in faces.items():
            if label not in dimension_of:
                raise serializers.ValidationError({'faces': f'Faces given for unknown simplex {label!r}.'})
            n = dimension_of[label]
            if len(entries) != n + 1:
                raise serializers.ValidationError({'faces': f'{label!r} needs {n + 1} faces.'})
            for entry in entries:
                target = dimension_of.get(entry['target'])
                if target is None:
                    raise serializers.ValidationError({'faces': f"Unknown face target {entry['target']!r}."})
                if target + len(entry['degeneracies']) != n - 1:
                    raise serializers.ValidationError({'faces': f'A face of {label!r} has the wrong dimension.'})
        if attrs.get('basepoint') and attrs['basepoint'] not in attrs['dimensions'][0]:
            raise serializers.ValidationError({'basepoint': 'Basepoint must be a vertex.'})
        return attrs


class CharacterSerializer(serializers.Serializer):
    """
    One irreducible character: values on the listed conjugacy class
    representatives, as exact rationals.
    """
    name = serializers.CharField()
    values = serializers.ListField(child=serializers.CharField(validators=[RationalStringValidator()]))

    def to_internal_value(self, data):
        value = super().to_internal_value(data)
        value['values'] = [parse_rational(v) for v in value['values']]
        return value


class CharacterTableSerializer(serializers.Serializer):
    classes = serializers.ListField(child=serializers.CharField())
    irreducibles = CharacterSerializer(many=True)


class GroupDocumentSerializer(serializers.Serializer):
    name = serializers.CharField(required=False, allow_blank=True)
    elements = serializers.ListField(child=serializers.CharField(validators=[BasisLabelValidator()]), required=False)
    table = serializers.ListField(child=serializers.ListField(child=serializers.CharField()), required=False)
    permutations = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0)), required=False,
    )
    generators = serializers.ListField(child=serializers.CharField(), required=False)
    kind = serializers.ChoiceField(choices=['constant', 'nerve'], default='constant')
    characters = CharacterTableSerializer(required=False)

    def validate(self, attrs):
        if 'permutations' in attrs:
            if 'table' in attrs or 'elements' in attrs:
                raise serializers.ValidationError('Give either a table or permutations, not both.')
            return attrs
        if 'table' not in attrs or 'elements' not in attrs:
            raise serializers.ValidationError('A group needs elements with a table, or permutations.')
        elements = attrs['elements']
        if len(set(elements)) != len(elements):
            raise serializers.ValidationError({'elements': 'Duplicate element label.'})
        known = set(elements)
        if len(attrs['table']) != len(elements) or any(
            len(row) != len(elements) or not set(row) <= known for row in attrs['table']
        ):
            raise serializers.ValidationError({'table': 'Table must be square over the listed elements.'})
        if not set(attrs.get('generators', [])) <= known:
            raise serializers.ValidationError({'generators': 'Unknown generator.'})
        return attrs


def space_to_document(space):
    document = {
        'dimensions': [space.nondegenerate.get(n, []) for n in range(space.dimension + 1)],
        'faces': {
            label: [{'degeneracies': list(face.word), 'target': face.label} for face in faces]
            for label, faces in space.faces.items()
            if faces
        },
    }
    if space.name:
        document['name'] = space.name
    if space.basepoint is not None:
        document['basepoint'] = space.basepoint
    return document
