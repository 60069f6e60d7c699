"""
API views.

Each view runs one pure pipeline on the posted documents. Errors are
rendered by ``apps.core.exception_handler``.
"""

import logging

from rest_framework import permissions
from rest_framework.response import Response
from rest_framework.views import APIView

from apps.equivariant.cohomology import equivariant_cohomology
from apps.rings.loader import load_ring
from apps.simplicial.loader import load_group, load_space

from .documents import adams_document, cohomology_document, homotopy_document
from .serializers import CohomologyRequestSerializer, RingRequestSerializer, validated

logger = logging.getLogger(__name__)


class HomotopyView(APIView):
    """
    Homotopy table of the free chain Lie model of a ring.
    """
    permission_classes = [permissions.AllowAny]

    def post(self, request):
        serializer = validated(RingRequestSerializer, request.data)
        ring = load_ring(serializer.validated_data['ring'])
        t = serializer.truncation()
        logger.info('API homotopy of %s in window %s', ring.name, t)
        return Response(homotopy_document(ring, t))


class AdamsView(APIView):
    """
    Adams E^1 page of a ring.
    """
    permission_classes = [permissions.AllowAny]

    def post(self, request):
        serializer = validated(RingRequestSerializer, request.data)
        ring = load_ring(serializer.validated_data['ring'])
        return Response(adams_document(ring, serializer.truncation()))


class CohomologyView(APIView):
    """
    Cohomology ring of a space; with a group, also its deck action.
    """
    permission_classes = [permissions.AllowAny]

    def post(self, request):
        data = validated(CohomologyRequestSerializer, request.data).validated_data
        space = load_space(data['space'])
        document = cohomology_document(space)
        if 'group' in data:
            group, _ = load_group(data['group'])
            rho = data.get('monodromy', 'nontrivial')
            document['equivariant'] = equivariant_cohomology(space, rho, group).document()
        return Response(document)
