"""
Tests for the HTTP API endpoints.
"""

from pathlib import Path

from django.conf import settings
from django.test import override_settings
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APISimpleTestCase

from apps.rings.loader import read_json

SAMPLES = Path(settings.BASE_DIR) / 'samples'


def sample(kind, name):
    return read_json(SAMPLES / kind / f'{name}.json')


class HomotopyAPITestCase(APISimpleTestCase):
    """Test cases for the homotopy endpoint."""

    def post(self, data):
        return self.client.post(reverse('api-homotopy'), data, format='json')

    def test_sphere(self):
        """Test pi_2 and pi_3 of S^2 with their weights."""
        response = self.post({'ring': sample('rings', 's2'), 'max_degree': 8, 'max_weight': 6})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        rows = response.json()['homotopy']
        self.assertEqual({row['n']: row['dim'] for row in rows if row['dim']}, {2: 1, 3: 1})
        self.assertIn({'n': 3, 'weight': 4, 'dim': 1}, response.json()['weights'])

    def test_cp2(self):
        """Test pi_2 and pi_5 of CP^2."""
        response = self.post({'ring': sample('rings', 'cp2'), 'max_degree': 7, 'max_weight': 6})
        rows = response.json()['homotopy']
        self.assertEqual({row['n']: row['dim'] for row in rows if row['dim']}, {2: 1, 5: 1})

    def test_not_commutative(self):
        """Test an invalid ring is rejected with its witness."""
        response = self.post({'ring': sample('rings', 'malformed'), 'max_degree': 4})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        error = response.json()['error']
        self.assertEqual(error['code'], 'not_graded_commutative')
        self.assertEqual(error['witness'], ['x', 'y'])

    def test_bad_window(self):
        """Test the window is validated before any computation."""
        response = self.post({'ring': sample('rings', 's2'), 'max_degree': 1})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('max_degree', response.json()['error']['fields'])

    def test_missing_ring(self):
        """Test a request without a ring document."""
        response = self.post({'max_degree': 4})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.json()['error']['code'], 'parse_error')

    def test_basis_guard(self):
        """Test the basis guard answers 422."""
        guarded = {**settings.MALCEV, 'BASIS_GUARD': 10}
        with override_settings(MALCEV=guarded):
            response = self.post({'ring': sample('rings', 'genus2'), 'max_degree': 5, 'max_weight': 4})
        self.assertEqual(response.status_code, status.HTTP_422_UNPROCESSABLE_ENTITY)
        self.assertEqual(response.json()['error']['code'], 'truncation_too_large')


class AdamsAPITestCase(APISimpleTestCase):
    """Test cases for the Adams endpoint."""

    def test_sphere(self):
        """Test the E^1 page of S^2 is returned with its window."""
        response = self.client.post(
            reverse('api-adams'),
            {'ring': sample('rings', 's2'), 'max_degree': 6, 'max_weight': 3},
            format='json',
        )
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        document = response.json()
        self.assertEqual(document['p'], [-3, -2, -1])
        self.assertEqual(len(document['E1']), 3)


class CohomologyAPITestCase(APISimpleTestCase):
    """Test cases for the cohomology endpoint."""

    def post(self, data):
        return self.client.post(reverse('api-cohomology'), data, format='json')

    def test_torus(self):
        """Test the betti numbers of the torus."""
        response = self.post({'space': sample('spaces', 'torus')})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.json()['betti'], [1, 2, 1])
        self.assertNotIn('equivariant', response.json())

    def test_equivariant(self):
        """Test the antipodal action on the cohomology of the cover of RP^2."""
        response = self.post({
            'space': sample('spaces', 'rp2'),
            'group': sample('groups', 'z2'),
            'monodromy': {'a': '1'},
        })
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        equivariant = response.json()['equivariant']
        self.assertEqual(equivariant['monodromy'], {'a': '1'})
        self.assertEqual(equivariant['betti'], [1, 0, 1])

    def test_monodromy_needs_group(self):
        """Test a monodromy without a group document."""
        response = self.post({'space': sample('spaces', 'circle'), 'monodromy': 'nontrivial'})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('group', response.json()['error']['fields'])

    def test_not_simplicial(self):
        """Test face data violating the simplicial identities."""
        response = self.post({'space': sample('spaces', 'not_simplicial')})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.json()['error']['witness']['simplex'], 's')

    def test_not_surjective(self):
        """Test a trivial monodromy onto Z2 is rejected."""
        response = self.post({
            'space': sample('spaces', 'circle'),
            'group': sample('groups', 'z2'),
            'monodromy': 'trivial',
        })
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.json()['error']['code'], 'not_surjective_monodromy')
