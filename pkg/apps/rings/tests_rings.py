"""
Tests for graded rings: loading, validation, cup products and duals.
"""

import tempfile
from fractions import Fraction
from pathlib import Path

from django.conf import settings
from django.test import SimpleTestCase

from apps.core.exceptions import (
    NotAssociative, NotConnected, NotGradedCommutative, ParseError,
    SignConventionFailure, UnitMissing, UnknownBasisLabel,
)
from apps.rings import catalog
from apps.rings.cohomology import ring_cohomology
from apps.rings.dual import dualize_reduced, retranspose
from apps.rings.loader import load_ring, load_ring_file, read_json
from apps.rings.ring import build_ring, cup
from apps.rings.serializers import ring_to_document

SAMPLES = Path(settings.BASE_DIR) / 'samples' / 'rings'


def basis(*pairs):
    return [{'label': label, 'degree': degree} for label, degree in pairs]


class LoadRingTestCase(SimpleTestCase):
    """Test cases for load_ring validation."""

    def test_sphere(self):
        """Test H*(S^2) is accepted with betti (1, 0, 1)."""
        ring = load_ring({'basis': basis(('1', 0), ('x', 2)), 'unit': '1', 'products': []})
        self.assertEqual(ring.betti(), [1, 0, 1])

    def test_cp2(self):
        """Test the truncated polynomial ring of CP^2."""
        ring = load_ring_file(SAMPLES / 'cp2.json')
        self.assertEqual(ring.betti(), [1, 0, 1, 0, 1])

    def test_not_graded_commutative(self):
        """Test x*y = y*x for odd x, y is rejected with a witness."""
        with self.assertRaises(NotGradedCommutative) as ctx:
            load_ring_file(SAMPLES / 'malformed.json')
        self.assertEqual(ctx.exception.witness, ['x', 'y'])

    def test_not_associative(self):
        """Test an associativity failure reports the basis triple."""
        document = {
            'basis': basis(('1', 0), ('x', 2), ('y', 2), ('z', 4), ('t', 6)),
            'unit': '1',
            'products': [
                {'left': 'x', 'right': 'y', 'value': [{'label': 'z', 'coeff': '1'}]},
                {'left': 'y', 'right': 'x', 'value': [{'label': 'z', 'coeff': '1'}]},
                {'left': 'x', 'right': 'z', 'value': [{'label': 't', 'coeff': '1'}]},
                {'left': 'z', 'right': 'x', 'value': [{'label': 't', 'coeff': '1'}]},
            ],
        }
        with self.assertRaises(NotAssociative) as ctx:
            load_ring(document)
        self.assertEqual(ctx.exception.witness, ['x', 'x', 'y'])

    def test_not_connected(self):
        """Test a second degree-0 class is rejected."""
        with self.assertRaises(NotConnected):
            load_ring({'basis': basis(('1', 0), ('e', 0)), 'unit': '1'})

    def test_unit_missing(self):
        """Test an undeclared unit."""
        with self.assertRaises(UnitMissing):
            load_ring({'basis': basis(('1', 0), ('x', 2)), 'unit': 'one'})

    def test_parse_errors(self):
        """Test schema problems raise ParseError with field errors."""
        with self.assertRaises(ParseError) as ctx:
            load_ring({'unit': '1'})
        self.assertIn('basis', ctx.exception.field_errors)

        with self.assertRaises(ParseError):
            load_ring({
                'basis': basis(('1', 0), ('x', 1), ('y', 1), ('z', 2)),
                'unit': '1',
                'products': [{'left': 'x', 'right': 'y', 'value': [{'label': 'z', 'coeff': '1/0'}]}],
            })

    def test_repeated_term(self):
        """Test a label repeated inside one product value is rejected."""
        with self.assertRaises(ParseError) as ctx:
            load_ring({
                'basis': basis(('1', 0), ('x', 2), ('y', 4)),
                'unit': '1',
                'products': [{
                    'left': 'x', 'right': 'x',
                    'value': [{'label': 'y', 'coeff': '1'}, {'label': 'y', 'coeff': '-1'}],
                }],
            })
        self.assertIn('products', ctx.exception.field_errors)

    def test_repeated_differential_term(self):
        """Test a label repeated inside one differential value is rejected."""
        with self.assertRaises(ParseError) as ctx:
            load_ring({
                'basis': basis(('1', 0), ('x', 1), ('y', 2)),
                'unit': '1',
                'differential': [{
                    'source': 'x',
                    'value': [{'label': 'y', 'coeff': '1'}, {'label': 'y', 'coeff': '2'}],
                }],
            })
        self.assertIn('differential', ctx.exception.field_errors)

    def test_invalid_utf8(self):
        """Test a file that is not UTF-8 raises ParseError."""
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'bad.json'
            path.write_bytes(b'{"basis": "\xff"}')
            with self.assertRaises(ParseError) as ctx:
                read_json(path)
        self.assertEqual(ctx.exception.exit_code, 2)

    def test_unknown_label_in_products(self):
        """Test products naming an unknown label."""
        with self.assertRaises(UnknownBasisLabel):
            load_ring({
                'basis': basis(('1', 0), ('x', 2)),
                'unit': '1',
                'products': [{'left': 'x', 'right': 'q', 'value': []}],
            })

    def test_leibniz_violation(self):
        """Test a differential that is not a derivation."""
        with self.assertRaises(SignConventionFailure):
            build_ring(
                [('1', 0), ('e', 0), ('f', 1)], '1',
                [('e', 'e', {'e': 1})],
                [('e', {'f': 1})],
            ).validate()

    def test_samples_match_catalog(self):
        """Test every sample document loads to its catalog ring."""
        pairs = {
            's2.json': catalog.sphere(2),
            's3.json': catalog.sphere(3),
            's4.json': catalog.sphere(4),
            'cp2.json': catalog.cp2(),
            'torus.json': catalog.torus(),
            'genus2.json': catalog.surface(2),
            's2xs2.json': catalog.sphere_product(),
            'circle_model.json': catalog.circle_model(),
            's2_plus_acyclic.json': catalog.sphere_with_acyclic_pair(),
        }
        for filename, ring in pairs.items():
            loaded = load_ring_file(SAMPLES / filename)
            self.assertEqual(ring_to_document(loaded), ring_to_document(ring), filename)


class CupTestCase(SimpleTestCase):
    """Test cases for cup products."""

    def test_unit_law(self):
        """Test cup(1, x) = x."""
        self.assertEqual(cup(catalog.sphere(2), '1', 'x'), {'x': 1})

    def test_cp2_square(self):
        """Test cup(x, x) = y on CP^2."""
        self.assertEqual(cup(catalog.cp2(), 'x', 'x'), {'y': 1})

    def test_genus_two(self):
        """Test the symplectic intersection form."""
        ring = catalog.surface(2)
        self.assertEqual(cup(ring, 'a1', 'b1'), {'w': 1})
        self.assertEqual(cup(ring, 'b1', 'a1'), {'w': -1})
        self.assertEqual(cup(ring, 'a1', 'a2'), {})

    def test_linear_combinations(self):
        """Test bilinear extension."""
        ring = catalog.torus()
        self.assertEqual(cup(ring, {'a': 2, 'b': 1}, {'b': Fraction(1, 2)}), {'w': 1})

    def test_unknown_label(self):
        """Test UnknownBasisLabel."""
        with self.assertRaises(UnknownBasisLabel):
            cup(catalog.cp2(), 'x', 'q')


class DualizeTestCase(SimpleTestCase):
    """Test cases for dualize_reduced."""

    def test_sphere(self):
        """Test H*(S^2) gives one generator of degree 1 and no coproduct."""
        data = dualize_reduced(catalog.sphere(2))
        self.assertEqual(data.generators, [('x', 1)])
        self.assertEqual(data.coproduct, {})

    def test_cp2(self):
        """Test the coproduct of y contains (x, x)."""
        data = dualize_reduced(catalog.cp2())
        self.assertEqual(data.generators, [('x', 1), ('y', 3)])
        self.assertEqual(data.coproduct['y'], {('x', 'x'): 1})

    def test_mixed_pair(self):
        """Test the mixed pair in H*(S^2 x S^2)."""
        data = dualize_reduced(catalog.sphere_product())
        self.assertEqual(data.coproduct['z'], {('x1', 'x2'): 1, ('x2', 'x1'): 1})

    def test_odd_sign(self):
        """Test the Koszul sign on odd left factors."""
        data = dualize_reduced(catalog.torus())
        self.assertEqual(data.coproduct['w'], {('a', 'b'): -1, ('b', 'a'): 1})

    def test_retranspose(self):
        """Test re-transposition recovers the reduced product table."""
        for ring in (catalog.cp2(), catalog.surface(2), catalog.sphere_product()):
            data = dualize_reduced(ring)
            expected = {}
            for (i, j), value in ring.products.items():
                if ring.unit_index in (i, j) or not value:
                    continue
                expected[(ring.labels[i], ring.labels[j])] = ring.labelled(value)
            self.assertEqual(retranspose(data), expected)


class RingCohomologyTestCase(SimpleTestCase):
    """Test cases for cohomology of dg rings."""

    def test_circle_model(self):
        """Test the circle model has the cohomology of a circle."""
        h = ring_cohomology(catalog.circle_model())
        self.assertEqual(h.dimensions(), [1, 1])
        self.assertEqual(h.labels, ['1', 'a'])

    def test_acyclic_pair(self):
        """Test an acyclic pair disappears in cohomology."""
        h = ring_cohomology(catalog.sphere_with_acyclic_pair())
        self.assertEqual(h.dimensions(), [1, 0, 1])
        h0 = ring_cohomology(catalog.sphere_with_acyclic_pair(low=0))
        self.assertEqual(h0.dimensions(), [1, 0, 1])

    def test_formal_ring_unchanged(self):
        """Test rings without differential are their own cohomology."""
        ring = catalog.cp2()
        self.assertIs(ring_cohomology(ring), ring)
