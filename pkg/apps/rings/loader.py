"""
Loading ring documents into validated ``GradedRing`` objects.
"""

import json
import logging

from apps.core.exceptions import ParseError

from .ring import build_ring
from .serializers import RingDocumentSerializer

logger = logging.getLogger(__name__)


def read_json(path):
    """Read a JSON document, mapping I/O and syntax problems to ParseError."""
    try:
        with open(path, encoding='utf-8') as handle:
            return json.load(handle)
    except OSError as exc:
        raise ParseError(f'Cannot read {path}: {exc.strerror}', witness=[str(path)])
    except json.JSONDecodeError as exc:
        raise ParseError(f'Invalid JSON in {path}: {exc.msg}', witness={'line': exc.lineno, 'column': exc.colno})
    except UnicodeDecodeError as exc:
        raise ParseError(f'{path} is not UTF-8: {exc.reason}', witness={'position': exc.start})


def load_ring(document):
    """
    Validate a ring document and return the ring.

    Raises ParseError for schema problems and the matching axiom error
    (NotAssociative, NotGradedCommutative, NotConnected, UnitMissing, ...)
    for algebraic ones.
    """
    serializer = RingDocumentSerializer(data=document)
    if not serializer.is_valid():
        logger.warning('Ring document rejected: %s', serializer.errors)
        raise ParseError('Ring document is not well-formed.', field_errors=serializer.errors)
    data = serializer.validated_data

    ring = build_ring(
        [(entry['label'], entry['degree']) for entry in data['basis']],
        data['unit'],
        [
            (entry['left'], entry['right'], {t['label']: t['coeff'] for t in entry['value']})
            for entry in data['products']
        ],
        [
            (entry['source'], {t['label']: t['coeff'] for t in entry['value']})
            for entry in data['differential']
        ],
        name=data.get('name') or None,
    )
    ring.validate()
    logger.info('Loaded ring %s with %d basis elements', ring.name or '<unnamed>', len(ring))
    return ring


def load_ring_file(path):
    return load_ring(read_json(path))
