"""
Integration tests chaining the pipelines: spaces to rings to models.
"""

from django.test import SimpleTestCase

from apps.equivariant.cohomology import equivariant_cohomology
from apps.equivariant.homotopy import equivariant_homotopy
from apps.lie.generators import Truncation
from apps.quillen.chevalley import round_trip
from apps.quillen.construction import build_G
from apps.quillen.homotopy import homotopy_groups
from apps.rings import catalog as rings
from apps.rings.loader import load_ring
from apps.rings.serializers import ring_to_document
from apps.simplicial import catalog
from apps.simplicial.cochains import cohomology_ring
from apps.simplicial.groups import ConstantGroup, cyclic, symmetric
from apps.simplicial.loops import fundamental_group, hom_orbits
from apps.simplicial.torsors import torsor_space


def nonzero(table):
    return {n: d for n, d in table.dims().items() if d}


class SpaceToHomotopyTestCase(SimpleTestCase):
    """Test the chain simplicial set -> cohomology ring -> model -> homotopy."""

    def test_sphere(self):
        """Test the simplicial S^2 gives the homotopy of the ring H*(S^2)."""
        t = Truncation(6, 6)
        ring = cohomology_ring(catalog.sphere(2))
        self.assertEqual(nonzero(homotopy_groups(build_G(ring, t), t)), {2: 1, 3: 1})

    def test_torus_matches_catalog(self):
        """Test the computed torus ring has the homotopy of the catalog ring."""
        t = Truncation(4, 4)
        computed = homotopy_groups(build_G(cohomology_ring(catalog.torus()), t), t)
        expected = homotopy_groups(build_G(rings.torus(), t), t)
        self.assertEqual(computed.dims(), expected.dims())
        self.assertEqual(computed.entry(1).lcs, expected.entry(1).lcs)

    def test_document_round_trip(self):
        """Test a computed ring survives its JSON document."""
        ring = cohomology_ring(catalog.rp2_triangulation())
        reloaded = load_ring(ring_to_document(ring))
        self.assertEqual(reloaded.dimensions(), ring.dimensions())

    def test_ce_round_trip(self):
        """Test the CE cochains of the model of the computed S^2 ring."""
        result = round_trip(cohomology_ring(catalog.sphere(2)), Truncation(6, 6))
        self.assertTrue(result.ok, result.document())


class RelativeTestCase(SimpleTestCase):
    """Test the relative pipelines against each other."""

    def test_torsors_and_presentations(self):
        """Test torsor counts agree with homomorphisms from the loop group."""
        for space, group in [(catalog.circle(), symmetric(3)), (catalog.torus(), cyclic(2))]:
            expected = len(hom_orbits(fundamental_group(space), group))
            self.assertEqual(torsor_space(space, ConstantGroup(group)).orbits, expected, space.name)

    def test_equivariant_cover(self):
        """Test the double cover of RP^2 carries S^2 homotopy with the antipodal action."""
        cohomology = equivariant_cohomology(catalog.rp2(), 'nontrivial', cyclic(2))
        self.assertEqual(cohomology.ring.dimensions(), [1, 0, 1])
        table = equivariant_homotopy(catalog.rp2(), 'nontrivial', cyclic(2), Truncation(4, 4))
        self.assertEqual(nonzero(table), {2: 1, 3: 1})
