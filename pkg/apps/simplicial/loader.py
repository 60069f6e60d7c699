"""
Loading space and group documents.
"""

import logging

from apps.core.exceptions import ParseError
from apps.rings.loader import read_json

from .groups import FiniteGroup, from_permutations, simplicial_group
from .serializers import GroupDocumentSerializer, SpaceDocumentSerializer
from .sets import build_space

logger = logging.getLogger(__name__)


def load_space(document):
    """
    Validate a space document and return the simplicial set.

    Raises ParseError for schema problems and SimplicialIdentityViolation
    when the faces do not compose.
    """
    serializer = SpaceDocumentSerializer(data=document)
    if not serializer.is_valid():
        logger.warning('Space document rejected: %s', serializer.errors)
        raise ParseError('Space document is not well-formed.', field_errors=serializer.errors)
    data = serializer.validated_data
    space = build_space(
        {n: labels for n, labels in enumerate(data['dimensions'])},
        {
            label: [(entry['degeneracies'], entry['target']) for entry in entries]
            for label, entries in data['faces'].items()
        },
        basepoint=data.get('basepoint'),
        name=data.get('name') or None,
    )
    logger.info('Loaded space %s with simplices %s', space.name or '<unnamed>', space.counts())
    return space


def load_space_file(path):
    return load_space(read_json(path))


def load_group(document):
    """Returns ``(group, kind)``; ``kind`` selects the simplicial group built from it."""
    serializer = GroupDocumentSerializer(data=document)
    if not serializer.is_valid():
        logger.warning('Group document rejected: %s', serializer.errors)
        raise ParseError('Group document is not well-formed.', field_errors=serializer.errors)
    data = serializer.validated_data
    name = data.get('name') or None
    if 'permutations' in data:
        group = from_permutations(data['permutations'], name=name)
    else:
        elements = data['elements']
        position = {label: i for i, label in enumerate(elements)}
        table = [[position[label] for label in row] for row in data['table']]
        generators = [position[label] for label in data['generators']] if 'generators' in data else None
        group = FiniteGroup(elements, table, generators, name=name)
    group.validate()
    if 'characters' in data:
        group.characters = _characters(group, data['characters'])
    logger.info('Loaded group %s of order %d', group.name or '<unnamed>', len(group))
    return group, data['kind']


def _characters(group, table):
    classes = [group.index(label) for label in table['classes']]
    for c in group.conjugacy_classes:
        if len(set(c) & set(classes)) != 1:
            raise ParseError('Character table needs one representative per conjugacy class.')
    return {
        'classes': classes,
        'irreducibles': {entry['name']: entry['values'] for entry in table['irreducibles']},
    }


def load_group_file(path):
    return load_group(read_json(path))


def load_simplicial_group_file(path):
    group, kind = load_group_file(path)
    return simplicial_group(group, kind)
