"""
Tests for representations, equivariant cohomology and weighted homotopy tables.
"""

from pathlib import Path

from django.conf import settings
from django.test import SimpleTestCase

from apps.core.exceptions import NotSurjectiveMonodromy, PropertyCheckFailed
from apps.equivariant.cohomology import equivariant_cohomology
from apps.equivariant.homotopy import equivariant_homotopy
from apps.equivariant.modules import GammaModule, invariants, isotypic_decomposition
from apps.equivariant.weights import weight_decomposition
from apps.lie.generators import Truncation
from apps.linear.matrix import Matrix
from apps.quillen.construction import build_G
from apps.quillen.homotopy import homotopy_groups
from apps.rings import catalog as rings
from apps.simplicial import catalog
from apps.simplicial.cochains import cohomology_ring
from apps.simplicial.groups import cyclic, symmetric, trivial
from apps.simplicial.loader import load_group_file

GROUPS = Path(settings.BASE_DIR) / 'samples' / 'groups'


def _labels(components):
    return {c.label: c.dimension for c in components}


class GammaModuleTestCase(SimpleTestCase):
    """Test cases for GammaModule and invariants."""

    def test_trivial_action(self):
        """Test the trivial action keeps the whole module."""
        m = GammaModule.trivial(symmetric(3), {0: ['a', 'b'], 2: ['c']})
        self.assertEqual(invariants(m).dimensions(), {0: 2, 2: 1})

    def test_sign_action(self):
        """Test averaging kills the sign representation."""
        group = cyclic(2)
        m = GammaModule(group, {0: ['s']}, {0: {1: Matrix([[-1]])}}).validate()
        self.assertEqual(invariants(m).dimension(0), 0)

    def test_regular_representation(self):
        """Test Q[S3] has one invariant line."""
        m = GammaModule.regular(symmetric(3)).validate()
        self.assertEqual(m.dimension(0), 6)
        self.assertEqual(invariants(m).dimension(0), 1)

    def test_not_a_representation(self):
        """Test a generator matrix violating g^2 = 1."""
        m = GammaModule(cyclic(2), {0: ['s']}, {0: {1: Matrix([[2]])}})
        with self.assertRaises(PropertyCheckFailed):
            m.validate()

    def test_character_multiplicities(self):
        """Test Q[S3] = trivial + sign + 2 standard."""
        group, _ = load_group_file(GROUPS / 's3.json')
        components = isotypic_decomposition(GammaModule.regular(group), 0)
        self.assertEqual(_labels(components), {'trivial': 1, 'sign': 1, 'standard': 4})
        self.assertEqual({c.label: c.multiplicity for c in components}['standard'], 2)

    def test_rational_blocks(self):
        """Test rational isotypic blocks of Q[S3] without a character table."""
        components = isotypic_decomposition(GammaModule.regular(symmetric(3)), 0)
        self.assertEqual(sorted(c.dimension for c in components), [1, 1, 4])
        self.assertEqual(_labels(components)['trivial'], 1)

    def test_cyclic_rational_blocks(self):
        """Test Q[Z3] splits as trivial plus a two-dimensional block."""
        components = isotypic_decomposition(GammaModule.regular(cyclic(3)), 0)
        self.assertEqual(sorted(c.dimension for c in components), [1, 2])


class EquivariantCohomologyTestCase(SimpleTestCase):
    """Test cases for equivariant_cohomology."""

    def test_trivial_group(self):
        """Test the trivial group gives the ordinary cohomology ring."""
        result = equivariant_cohomology(catalog.torus(), 'trivial', trivial())
        self.assertEqual(result.ring.dimensions(), cohomology_ring(catalog.torus()).dimensions())

    def test_projective_plane(self):
        """Test H*(S^2) with the antipodal action: trivial in degree 0, sign in degree 2."""
        group, _ = load_group_file(GROUPS / 'z2.json')
        result = equivariant_cohomology(catalog.rp2(), {'a': '1'}, group)
        self.assertEqual(result.ring.dimensions(), [1, 0, 1])
        self.assertEqual(result.module.generator_matrix(1, 2), Matrix([[-1]]))
        self.assertEqual(_labels(isotypic_decomposition(result.module, 0)), {'trivial': 1})
        self.assertEqual(_labels(isotypic_decomposition(result.module, 2)), {'sign': 1})

    def test_circle_double_cover(self):
        """Test the rotation of the double cover acts trivially on cohomology."""
        result = equivariant_cohomology(catalog.circle(), 'nontrivial', cyclic(2))
        self.assertEqual(_labels(isotypic_decomposition(result.module, 0)), {'trivial': 1})
        self.assertEqual(_labels(isotypic_decomposition(result.module, 1)), {'trivial': 1})

    def test_document(self):
        """Test the document lists monodromy and isotypic components."""
        result = equivariant_cohomology(catalog.circle(), {'e': '1'}, cyclic(2))
        document = result.document()
        self.assertEqual(document['monodromy'], {'e': '1'})
        self.assertEqual(document['degrees'][1]['isotypic'], [{'label': 'trivial', 'dimension': 1}])

    def test_not_surjective(self):
        """Test a monodromy with a proper image."""
        with self.assertRaises(NotSurjectiveMonodromy):
            equivariant_cohomology(catalog.circle(), 'trivial', cyclic(2))
        with self.assertRaises(NotSurjectiveMonodromy):
            equivariant_cohomology(catalog.sphere(2), 'nontrivial', cyclic(2))


class EquivariantHomotopyTestCase(SimpleTestCase):
    """Test cases for equivariant_homotopy."""

    def test_projective_plane(self):
        """Test pi_2 is the sign and pi_3 the trivial representation."""
        group, _ = load_group_file(GROUPS / 'z2.json')
        result = equivariant_homotopy(catalog.rp2(), {'a': '1'}, group, Truncation(4, 4))
        self.assertEqual(result.components(2), {'sign': 1})
        self.assertEqual(result.components(3), {'trivial': 1})
        self.assertEqual(result.dims()[4], 0)

    def test_forgetting_the_action(self):
        """Test the underlying table is that of the cover's cohomology ring."""
        t = Truncation(5, 4)
        result = equivariant_homotopy(catalog.rp2(), {'a': '1'}, cyclic(2), t)
        cover = equivariant_cohomology(catalog.rp2(), {'a': '1'}, cyclic(2)).cover
        expected = homotopy_groups(build_G(cohomology_ring(cover), t), t)
        self.assertEqual(result.dims(), expected.dims())

    def test_trivial_group(self):
        """Test the trivial group reproduces the ordinary homotopy table."""
        t = Truncation(5, 4)
        result = equivariant_homotopy(catalog.sphere(2), 'trivial', trivial(), t)
        expected = homotopy_groups(build_G(cohomology_ring(catalog.sphere(2)), t), t)
        self.assertEqual(result.dims(), expected.dims())
        self.assertEqual(result.components(2), {'trivial': 1})

    def test_document(self):
        """Test isotypic fields in the table document."""
        group, _ = load_group_file(GROUPS / 'z2.json')
        document = equivariant_homotopy(catalog.rp2(), {'a': '1'}, group, Truncation(4, 4)).document()
        self.assertEqual(document['group'], 'Z2')
        row = next(r for r in document['homotopy'] if r['n'] == 3)
        self.assertEqual(row['isotypic'], {'trivial': 1})
        self.assertEqual(row['isotypic_by_weight'], {'4': {'trivial': 1}})


class WeightDecompositionTestCase(SimpleTestCase):
    """Test cases for weight_decomposition."""

    def test_sphere(self):
        """Test pi_2(S^2) has weight 2 and pi_3 weight 4."""
        report = weight_decomposition(
            homotopy_groups(build_G(rings.sphere(2), Truncation(6, 6))), simply_connected=True,
        )
        self.assertEqual(report.weights(2), {2: 1})
        self.assertEqual(report.weights(3), {4: 1})

    def test_cp2(self):
        """Test the class [v, w] in pi_5 has weight 6."""
        report = weight_decomposition(
            homotopy_groups(build_G(rings.cp2(), Truncation(7, 6))), simply_connected=True,
        )
        self.assertEqual(report.weights(2), {2: 1})
        self.assertEqual(report.weights(5), {6: 1})

    def test_weighted_table(self):
        """Test isotypic labels carried into the weight rows."""
        group, _ = load_group_file(GROUPS / 'z2.json')
        table = equivariant_homotopy(catalog.rp2(), {'a': '1'}, group, Truncation(4, 4))
        report = weight_decomposition(table, simply_connected=True)
        self.assertEqual(
            [row.document() for row in report.rows],
            [
                {'n': 2, 'weight': 2, 'dim': 1, 'isotypic': {'sign': 1}},
                {'n': 3, 'weight': 4, 'dim': 1, 'isotypic': {'trivial': 1}},
            ],
        )
