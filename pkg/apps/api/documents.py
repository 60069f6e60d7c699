"""
Output documents shared by the HTTP views and the management commands.
"""

import logging

from apps.equivariant.cohomology import equivariant_cohomology
from apps.equivariant.homotopy import equivariant_homotopy
from apps.equivariant.weights import weight_decomposition
from apps.quillen.adams import adams_E1
from apps.quillen.construction import build_Gbar
from apps.quillen.homotopy import homotopy_groups
from apps.rings.serializers import ring_to_document
from apps.simplicial.cochains import cohomology_ring

logger = logging.getLogger(__name__)

FORMAL_NOTE = 'Homotopy omitted: pass --formal to assert that the cochains are formal.'


def homotopy_document(ring, t):
    """Homotopy table of the model of ``ring``, with weights when the model is weight graded."""
    model = build_Gbar(ring, t)
    table = homotopy_groups(model, t)
    document = table.document(model.algebra)
    if table.homogeneous:
        document['weights'] = weight_decomposition(table).document()['weights']
    return document


def adams_document(ring, t):
    return adams_E1(ring, t).document()


def cohomology_document(space):
    ring = cohomology_ring(space)
    return {'space': space.name, 'betti': ring.dimensions(), 'ring': ring_to_document(ring)}


def space_document(space, t, formal=False, group=None, monodromy=None):
    """
    Cohomology of ``space``, its deck action when a group is given, and
    homotopy only when the cochains are asserted formal.
    """
    document = cohomology_document(space)
    if group is not None:
        monodromy = monodromy or 'nontrivial'
        document['equivariant'] = equivariant_cohomology(space, monodromy, group).document()
    if not formal:
        document['note'] = FORMAL_NOTE
        logger.info('Skipping homotopy of %s: not asserted formal', space.name)
        return document
    if group is None:
        document['homotopy'] = homotopy_document(cohomology_ring(space), t)
    else:
        table = equivariant_homotopy(space, monodromy, group, t)
        document['homotopy'] = table.document()
        document['homotopy']['weights'] = weight_decomposition(table).document()['weights']
    return document
