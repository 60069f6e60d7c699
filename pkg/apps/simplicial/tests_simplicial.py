"""
Tests for simplicial sets: loading, cochains, loop groups, torsors and covers.
"""

from pathlib import Path

from django.conf import settings
from django.test import SimpleTestCase

from apps.core.exceptions import (
    EnumerationBudgetExceeded, NotACocycle, NotAssociative, NotReduced,
    NotSurjectiveMonodromy, ParseError, SimplicialIdentityViolation,
)
from apps.doldkan.cosimplicial import normalize
from apps.linear.complexes import betti_numbers
from apps.simplicial import catalog
from apps.simplicial.cochains import cochain_complex, cochain_module, cohomology_ring
from apps.simplicial.covering import covering_complex, nontrivial_monodromy
from apps.simplicial.groups import ConstantGroup, NerveGroup, cyclic, from_permutations, klein_four, symmetric
from apps.simplicial.loader import load_group, load_group_file, load_space, load_space_file
from apps.simplicial.loops import fundamental_group, hom_count, hom_orbits, loop_group
from apps.simplicial.serializers import space_to_document
from apps.simplicial.sets import Simplex, build_space, degeneracy_word, from_word
from apps.simplicial.torsors import check_mc, gauge_functor_checks, torsor_space, MaurerCartanSearch

SAMPLES = Path(settings.BASE_DIR) / 'samples'


class SimplicialSetTestCase(SimpleTestCase):
    """Test cases for SimplicialSet."""

    def test_point(self):
        """Test the point is one reduced vertex."""
        x = catalog.point()
        self.assertEqual(x.counts(), [1])
        self.assertTrue(x.is_reduced)

    def test_rp2_triangulation(self):
        """Test the six-vertex projective plane is two-dimensional with chi 1."""
        x = catalog.rp2_triangulation()
        self.assertEqual(x.dimension, 2)
        self.assertEqual(x.counts(), [6, 15, 10])
        self.assertEqual(x.euler_characteristic(), 1)

    def test_degeneracy_words(self):
        """Test words and surjections describe the same degenerate simplices."""
        self.assertEqual(from_word((1, 0), 0), (0, 0, 0))
        self.assertEqual(degeneracy_word((0, 0, 1)), (0,))
        self.assertEqual(degeneracy_word((0, 1, 1)), (1,))
        self.assertEqual(Simplex('v', (0, 0, 0)).render(), 's1s0(v)')

    def test_faces_of_degenerate_simplices(self):
        """Test d0 s1 e = s0 d0 e and d1 s1 e = d2 s1 e = e."""
        x = catalog.circle()
        e = x.simplex('e')
        s1e = x.degeneracy(1, e)
        self.assertEqual(s1e, Simplex('e', (0, 1, 1)))
        self.assertEqual(x.face(0, s1e), Simplex('v', (0, 0)))
        self.assertEqual(x.face(1, s1e), e)
        self.assertEqual(x.face(2, s1e), e)

    def test_simplices_listing(self):
        """Test all 2-simplices of the circle: s1 s0 v, s1 e and s0 e."""
        x = catalog.circle()
        self.assertEqual(len(x.simplices(2)), 3)
        self.assertEqual(x.degenerate(2), x.simplices(2))

    def test_identity_violation(self):
        """Test d0 d2 != d1 d0 is reported."""
        with self.assertRaises(SimplicialIdentityViolation):
            build_space(
                {0: ['p', 'q'], 1: ['e'], 2: ['s']},
                {'e': [((), 'q'), ((), 'p')], 's': [((), 'e')] * 3},
            )


class LoadSpaceTestCase(SimpleTestCase):
    """Test cases for load_space and load_group."""

    def test_samples_match_catalog(self):
        """Test every sample document loads to its catalog space."""
        pairs = {
            'point.json': catalog.point(),
            'circle.json': catalog.circle(),
            'wedge2.json': catalog.wedge_of_circles(2),
            's2.json': catalog.sphere(2),
            'torus.json': catalog.torus(),
            'rp2.json': catalog.rp2(),
            'rp2_six_vertex.json': catalog.rp2_triangulation(),
        }
        for filename, space in pairs.items():
            loaded = load_space_file(SAMPLES / 'spaces' / filename)
            self.assertEqual(space_to_document(loaded), space_to_document(space), filename)

    def test_circle_document(self):
        """Test a one-vertex one-edge document is accepted and reduced."""
        x = load_space({
            'dimensions': [['v'], ['e']],
            'faces': {'e': [{'target': 'v'}, {'target': 'v'}]},
        })
        self.assertTrue(x.is_reduced)
        self.assertEqual(x.counts(), [1, 1])

    def test_sample_violation(self):
        """Test the non-simplicial sample raises with a witness."""
        with self.assertRaises(SimplicialIdentityViolation) as caught:
            load_space_file(SAMPLES / 'spaces' / 'not_simplicial.json')
        self.assertEqual(caught.exception.witness['simplex'], 's')

    def test_missing_faces(self):
        """Test an edge without faces is a parse error."""
        with self.assertRaises(ParseError):
            load_space({'dimensions': [['v'], ['e']]})

    def test_increasing_degeneracies(self):
        """Test degeneracy words must be strictly decreasing."""
        with self.assertRaises(ParseError):
            load_space({
                'dimensions': [['v'], [], [], ['x']],
                'faces': {'x': [{'degeneracies': [0, 1], 'target': 'v'}] * 4},
            })

    def test_group_documents(self):
        """Test table and permutation documents."""
        z2, kind = load_group_file(SAMPLES / 'groups' / 'z2.json')
        self.assertEqual((len(z2), kind), (2, 'constant'))
        self.assertEqual(set(z2.characters['irreducibles']), {'trivial', 'sign'})
        s3, _ = load_group_file(SAMPLES / 'groups' / 's3.json')
        self.assertEqual(len(s3), 6)
        self.assertFalse(s3.is_abelian)
        self.assertEqual(len(s3.conjugacy_classes), 3)
        _, kind = load_group_file(SAMPLES / 'groups' / 'z2_nerve.json')
        self.assertEqual(kind, 'nerve')

    def test_non_associative_table(self):
        """Test a table with identity but no associativity."""
        with self.assertRaises(NotAssociative):
            load_group({
                'elements': ['e', 'a', 'b'],
                'table': [['e', 'a', 'b'], ['a', 'e', 'a'], ['b', 'b', 'e']],
            })


class CohomologyRingTestCase(SimpleTestCase):
    """Test cases for cochains and cohomology_ring."""

    def test_circle(self):
        """Test betti (1, 1) with no products."""
        ring = cohomology_ring(catalog.circle())
        self.assertEqual(ring.dimensions(), [1, 1])
        (a,) = ring.indices_in_degree(1)
        self.assertEqual(ring.multiply_basis(a, a), {})

    def test_torus_products(self):
        """Test betti (1, 2, 1) and a b = -b a != 0."""
        ring = cohomology_ring(catalog.torus())
        self.assertEqual(ring.dimensions(), [1, 2, 1])
        a, b = ring.indices_in_degree(1)
        self.assertTrue(ring.multiply_basis(a, b))
        self.assertEqual(
            ring.multiply_basis(a, b),
            {k: -c for k, c in ring.multiply_basis(b, a).items()},
        )

    def test_sphere(self):
        """Test the degenerate-faced 2-simplex gives H*(S^2)."""
        self.assertEqual(cohomology_ring(catalog.sphere(2)).dimensions(), [1, 0, 1])

    def test_projective_plane(self):
        """Test both models of RP^2 are rationally acyclic."""
        for x in (catalog.rp2(), catalog.rp2_triangulation()):
            self.assertEqual(betti_numbers(cochain_complex(x)), {0: 1, 1: 0, 2: 0}, x.name)
            self.assertEqual(cohomology_ring(x).dimensions(), [1])

    def test_cochain_module_normalizes(self):
        """Test the Dold-Kan normalization of Q^(X_n) matches the normalized cochains."""
        x = catalog.hollow_triangle()
        normalized = normalize(cochain_module(x)).complex
        betti = betti_numbers(normalized)
        self.assertEqual((betti[0], betti[1]), (1, 1))
        self.assertEqual([normalized.dimension(n) for n in range(2)], x.counts())

    def test_cochain_module_identities(self):
        """Test the cosimplicial identities of the circle's cochains."""
        cochain_module(catalog.circle(), top=2).check_identities()


class FiniteGroupTestCase(SimpleTestCase):
    """Test cases for FiniteGroup and from_permutations."""

    def test_symmetric_group(self):
        """Test S3 is closed under composition with the identity listed first."""
        group = symmetric(3)
        self.assertEqual(len(group), 6)
        self.assertEqual(group.identity, 0)
        self.assertEqual(group.label(0), '0.1.2')
        self.assertFalse(group.is_abelian)
        self.assertEqual(sorted(len(c) for c in group.conjugacy_classes), [1, 2, 3])

    def test_composition(self):
        """Test (p q)(k) = p(q(k))."""
        group = symmetric(3)
        product = group.multiply(group.index('1.0.2'), group.index('1.2.0'))
        self.assertEqual(group.label(product), '0.2.1')

    def test_power(self):
        """Test powers and negative exponents."""
        group = symmetric(3)
        cycle = group.index('1.2.0')
        self.assertEqual(group.power(cycle, 3), group.identity)
        self.assertEqual(group.power(cycle, -1), group.inverse(cycle))
        self.assertEqual(group.evaluate([(0, 2), (1, 1)], [cycle, cycle]), group.identity)

    def test_klein_four(self):
        """Test V4 is abelian of order 4."""
        group = klein_four()
        self.assertEqual(len(group), 4)
        self.assertTrue(group.is_abelian)

    def test_not_permutations(self):
        """Test generators that are not permutations are rejected."""
        with self.assertRaises(ParseError):
            from_permutations([[0, 0, 1]])


class LoopGroupTestCase(SimpleTestCase):
    """Test cases for loop_group and fundamental_group."""

    def test_circle(self):
        """Test G_0 is free on the edge."""
        self.assertEqual(len(loop_group(catalog.circle()).levels[0].generators), 1)

    def test_wedge(self):
        """Test G_0 is free of rank 2 for the wedge of two circles."""
        presentation = fundamental_group(catalog.wedge_of_circles(2))
        self.assertEqual(len(presentation.generators), 2)
        self.assertEqual(presentation.relators, [])

    def test_point(self):
        """Test the point has trivial loop groups."""
        group = loop_group(catalog.point(), 2)
        self.assertEqual([len(level.generators) for level in group.levels.values()], [0, 0, 0])

    def test_not_reduced(self):
        """Test NotReduced for a space with several vertices."""
        with self.assertRaises(NotReduced):
            loop_group(catalog.hollow_triangle())

    def test_torus(self):
        """Test Hom(Z^2, S3) has 18 elements and Hom(Z^2, Z2) has 4."""
        presentation = fundamental_group(catalog.torus())
        self.assertEqual(len(hom_count(presentation, symmetric(3))), 18)
        self.assertEqual(len(hom_count(presentation, cyclic(2))), 4)

    def test_projective_plane(self):
        """Test pi_1(RP^2) = Z/2 from both models."""
        self.assertEqual(fundamental_group(catalog.rp2()).render()['relators'], ['a^-1*a^-1'])
        self.assertEqual(len(hom_orbits(fundamental_group(catalog.rp2()), symmetric(3))), 2)
        self.assertEqual(len(hom_count(fundamental_group(catalog.rp2_triangulation()), cyclic(2))), 2)

    def test_circle_structure_maps(self):
        """Test d0 [s1 e] = d1 [s1 e] = [e] and s0 [e] = [s1 e] on the circle."""
        group = loop_group(catalog.circle())
        level0, level1 = group.levels[0], group.levels[1]
        (w,) = level1.generators
        e = level0.free.generators[0]
        self.assertEqual(level1.faces[0][w], e)
        self.assertEqual(level1.faces[1][w], e)
        self.assertEqual(level0.degeneracies[0][level0.generators[0]], level1.free.generators[0])

    def test_relators_are_free_group_words(self):
        """Test the RP^2 relator is the square of the inverse generator."""
        presentation = fundamental_group(catalog.rp2())
        (a,) = presentation.free.generators
        self.assertEqual(presentation.relators, [a ** -2])
        self.assertEqual(len(presentation.relators[0]), 2)

    def test_spanning_tree(self):
        """Test the hollow triangle has one generator after collapsing a tree."""
        presentation = fundamental_group(catalog.hollow_triangle())
        self.assertEqual(presentation.generators, ['1-2'])

    def test_budget(self):
        """Test the homomorphism enumeration budget."""
        with self.assertRaises(EnumerationBudgetExceeded):
            hom_count(fundamental_group(catalog.wedge_of_circles(2)), symmetric(3), budget=10)


class TorsorTestCase(SimpleTestCase):
    """Test cases for torsor_space."""

    def test_point(self):
        """Test the point has a single orbit for any group."""
        report = torsor_space(catalog.point(), ConstantGroup(symmetric(3)))
        self.assertEqual(report.orbits, 1)

    def test_circle_s3(self):
        """Test the circle with S3 has one orbit per conjugacy class."""
        report = torsor_space(catalog.circle(), ConstantGroup(symmetric(3)))
        self.assertEqual((report.solutions, report.gauges, report.orbits), (6, 6, 3))

    def test_torus_z2(self):
        """Test the torus with Z2 has four orbits."""
        self.assertEqual(torsor_space(catalog.torus(), ConstantGroup(cyclic(2))).orbits, 4)

    def test_solutions_satisfy_identities(self):
        """Test every enumerated element passes the full identity check."""
        for omega in MaurerCartanSearch(catalog.torus(), ConstantGroup(symmetric(3))).solutions():
            self.assertTrue(check_mc(catalog.torus(), ConstantGroup(symmetric(3)), omega))

    def test_matches_hom_orbits(self):
        """Test constant coefficients agree with Hom(pi_1, G) modulo conjugation."""
        for x, group in [
            (catalog.circle(), symmetric(3)),
            (catalog.wedge_of_circles(2), cyclic(2)),
            (catalog.torus(), klein_four()),
            (catalog.rp2(), symmetric(3)),
        ]:
            expected = len(hom_orbits(fundamental_group(x), group))
            self.assertEqual(torsor_space(x, ConstantGroup(group)).orbits, expected, x.name)

    def test_nerve_coefficients(self):
        """Test the nerve of Z2 counts degree-2 cohomology with Z2 coefficients."""
        group = NerveGroup(cyclic(2))
        self.assertEqual(torsor_space(catalog.circle(), group).orbits, 1)
        self.assertEqual(torsor_space(catalog.sphere(2), group).orbits, 2)
        self.assertEqual(torsor_space(catalog.torus(), group).orbits, 2)

    def test_budget(self):
        """Test EnumerationBudgetExceeded on a tiny budget."""
        with self.assertRaises(EnumerationBudgetExceeded):
            torsor_space(catalog.torus(), ConstantGroup(symmetric(3)), budget=5)

    def test_nerve_group_identities(self):
        """Test the nerve group satisfies the simplicial group identities."""
        self.assertTrue(NerveGroup(cyclic(3)).verify(3))
        self.assertTrue(ConstantGroup(symmetric(3)).verify(2))


class GaugeFunctorTestCase(SimpleTestCase):
    """Test cases for gauge_functor_checks."""

    def test_circle_z2(self):
        """Test the three sets have two elements for the circle."""
        report = gauge_functor_checks(catalog.circle(), ConstantGroup(cyclic(2)))
        self.assertEqual((report.gauges, report.v_maps, report.h_maps), (2, 2, 2))

    def test_point(self):
        """Test the gauge group of the point is the group."""
        report = gauge_functor_checks(catalog.point(), ConstantGroup(symmetric(3)))
        self.assertEqual((report.gauges, report.v_maps, report.h_maps), (6, 6, 6))

    def test_wedge_s3(self):
        """Test the wedge of circles with S3."""
        report = gauge_functor_checks(catalog.wedge_of_circles(2), ConstantGroup(symmetric(3)))
        self.assertEqual(report.gauges, report.v_maps)
        self.assertEqual(report.gauges, report.h_maps)

    def test_torus_nerve(self):
        """Test a non-constant group: one Z2 choice per edge of the torus."""
        report = gauge_functor_checks(catalog.torus(), NerveGroup(cyclic(2)))
        self.assertEqual((report.gauges, report.v_maps, report.h_maps), (8, 8, 8))


class CoveringTestCase(SimpleTestCase):
    """Test cases for covering_complex."""

    def test_trivial_monodromy(self):
        """Test trivial monodromy gives disjoint copies."""
        cover = covering_complex(catalog.circle(), cyclic(2), {})
        self.assertEqual(cover.counts(), [2, 2])
        self.assertFalse(cover.is_connected)

    def test_circle_double_cover(self):
        """Test the connected double cover of the circle is a 2-gon."""
        cover = covering_complex(catalog.circle(), cyclic(2), {'e': 1})
        self.assertTrue(cover.is_connected)
        self.assertEqual(cohomology_ring(cover).dimensions(), [1, 1])
        self.assertEqual(cover.deck(1, 'e@0'), 'e@1')

    def test_projective_plane_covers(self):
        """Test the orientation covers of RP^2 are spheres."""
        x = catalog.rp2_triangulation()
        cover = covering_complex(x, cyclic(2), nontrivial_monodromy(x, cyclic(2)))
        self.assertEqual(cover.euler_characteristic(), 2)
        self.assertEqual(cohomology_ring(cover).dimensions(), [1, 0, 1])
        cover = covering_complex(catalog.rp2(), cyclic(2), {'a': 1})
        self.assertEqual(cover.counts(), [2, 2, 2])
        self.assertEqual(cohomology_ring(cover).dimensions(), [1, 0, 1])

    def test_euler_characteristic(self):
        """Test chi of a cover is |group| chi of the base."""
        x = catalog.torus()
        group = klein_four()
        cover = covering_complex(x, group, nontrivial_monodromy(x, group))
        self.assertEqual(cover.euler_characteristic(), 4 * x.euler_characteristic())
        self.assertTrue(cover.is_connected)

    def test_not_a_cocycle(self):
        """Test the witnessing 2-simplex for a labelling that fails to compose."""
        with self.assertRaises(NotACocycle) as caught:
            covering_complex(catalog.torus(), cyclic(2), {'a': 1})
        self.assertEqual(caught.exception.witness, {'simplex': 's'})

    def test_simply_connected(self):
        """Test no monodromy of S^2 generates Z2."""
        with self.assertRaises(NotSurjectiveMonodromy):
            nontrivial_monodromy(catalog.sphere(2), cyclic(2))
