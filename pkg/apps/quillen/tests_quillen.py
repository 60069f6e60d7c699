"""
Tests for free chain Lie models, homotopy groups, minimal models, the
Adams page and Chevalley-Eilenberg cochains.
"""

from fractions import Fraction

from django.test import SimpleTestCase

from apps.core.exceptions import NotACycle
from apps.lie.algebra import FreeLieAlgebra, lie_weight_dims
from apps.lie.generators import Truncation
from apps.lie.words import LieWord
from apps.linear.matrix import Matrix
from apps.linear.vectors import add_into
from apps.quillen.adams import adams_E1
from apps.quillen.chevalley import ce_cochains, round_trip
from apps.quillen.construction import build_G, build_Gbar, killed_duals
from apps.quillen.dgl import FreeDGLie
from apps.quillen.homotopy import block_homology, homotopy_groups, lcs_ranks, whitehead_bracket, words_by_degree
from apps.quillen.minimal import abelianization_homology, minimal_model
from apps.rings import catalog


def nonzero(dims):
    return {n: d for n, d in dims.items() if d}


class BuildModelTestCase(SimpleTestCase):
    """Test cases for build_G and build_Gbar."""

    def test_odd_sphere(self):
        """Test H*(S^3) gives one even generator with D = 0."""
        model = build_G(catalog.sphere(3), Truncation(6, 4))
        self.assertEqual(list(model.generators), [('x', 2)])
        self.assertEqual(model.image('x'), {})

    def test_cp2(self):
        """Test Dy = -[x, x] / 2 for CP^2."""
        model = build_G(catalog.cp2(), Truncation(7, 4))
        self.assertEqual(list(model.generators), [('x', 1), ('y', 3)])
        self.assertEqual(model.image('y'), {LieWord((0,), True): Fraction(-1)})
        self.assertTrue(model.is_minimal())
        self.assertTrue(model.is_weight_homogeneous())

    def test_genus_two(self):
        """Test Dw = -([a1, b1] + [a2, b2]) for the genus-2 surface."""
        model = build_G(catalog.surface(2), Truncation(3, 3))
        algebra = model.algebra
        self.assertEqual(model.generators.labels, ['a1', 'a2', 'b1', 'b2', 'w'])
        expected = algebra.bracket(algebra.generator('a1'), algebra.generator('b1'))
        add_into(expected, algebra.bracket(algebra.generator('a2'), algebra.generator('b2')))
        self.assertEqual(model.image('w'), {b: -c for b, c in expected.items()})

    def test_gbar_without_differential(self):
        """Test build_Gbar equals build_G when d = 0."""
        ring = catalog.cp2()
        t = Truncation(5, 3)
        self.assertEqual(killed_duals(ring), [])
        self.assertEqual(build_Gbar(ring, t).document(), build_G(ring, t).document())

    def test_gbar_kills_acyclic_pair(self):
        """Test an acyclic pair in degrees 0 and 1 is quotiented away."""
        ring = catalog.sphere_with_acyclic_pair(low=0)
        self.assertEqual(killed_duals(ring), ['q'])
        model = build_Gbar(ring, Truncation(5, 4))
        self.assertEqual(list(model.generators), [('x', 1)])

    def test_gbar_circle_model(self):
        """Test Dh = -g once f is killed in the circle model."""
        model = build_Gbar(catalog.circle_model(), Truncation(3, 3))
        self.assertEqual(model.generators.labels, ['a', 'g', 'h'])
        g = model.algebra.generator('g')
        self.assertEqual(model.image('h'), {b: -c for b, c in g.items()})


class HomotopyGroupsTestCase(SimpleTestCase):
    """Test cases for homotopy_groups."""

    def test_sphere_two(self):
        """Test pi_2 = pi_3 = 1 for S^2 and nothing above."""
        table = homotopy_groups(build_G(catalog.sphere(2), Truncation(6, 6)))
        self.assertEqual(table.dims(), {1: 0, 2: 1, 3: 1, 4: 0, 5: 0, 6: 0})
        self.assertTrue(all(entry.stable for entry in table.entries))
        self.assertEqual(table.entry(3).weights, {4: 1})
        self.assertEqual([element for _, element in table.entry(3).classes][0].keys(),
                         {LieWord((0,), True): 1}.keys())

    def test_sphere_four(self):
        """Test pi_4 = pi_7 = 1 for S^4."""
        table = homotopy_groups(build_G(catalog.sphere(4), Truncation(7, 4)))
        self.assertEqual(nonzero(table.dims()), {4: 1, 7: 1})

    def test_odd_sphere(self):
        """Test S^3 only has pi_3."""
        table = homotopy_groups(build_G(catalog.sphere(3), Truncation(6, 4)))
        self.assertEqual(nonzero(table.dims()), {3: 1})

    def test_cp2(self):
        """Test pi_2 = pi_5 = 1 for CP^2 with weights 2 and 6."""
        table = homotopy_groups(build_G(catalog.cp2(), Truncation(7, 6)))
        self.assertEqual(table.dims(), {1: 0, 2: 1, 3: 0, 4: 0, 5: 1, 6: 0, 7: 0})
        self.assertEqual(table.entry(2).weights, {2: 1})
        self.assertEqual(table.entry(5).weights, {6: 1})
        self.assertTrue(all(entry.stable for entry in table.entries))
        (weight, element), = table.entry(5).classes
        self.assertEqual(set(element), {LieWord((0, 1), False)})

    def test_weight_bookkeeping(self):
        """Test class weight is degree plus bracket weight."""
        table = homotopy_groups(build_G(catalog.cp2(), Truncation(7, 6)))
        for entry in table.entries:
            for weight, element in entry.classes:
                for b in element:
                    self.assertEqual(weight, entry.n - 1 + b.weight)

    def test_genus_two(self):
        """Test the genus-2 surface is aspherical with LCS ranks 4, 5, 16."""
        table = homotopy_groups(build_G(catalog.surface(2), Truncation(4, 4)))
        for n in (2, 3, 4):
            self.assertEqual(table.entry(n).dim, 0)
        lcs = table.entry(1).lcs
        self.assertEqual((lcs[1], lcs[2], lcs[3]), (4, 5, 16))
        self.assertFalse(table.entry(1).stable)

    def test_lcs_torus(self):
        """Test the torus has abelian H_0 of rank 2."""
        self.assertEqual(lcs_ranks(build_G(catalog.torus(), Truncation(3, 3))), {1: 2, 2: 0, 3: 0})

    def test_block_homology_degree(self):
        """Test a block reports and logs the degree it was computed in."""
        dgl = build_G(catalog.cp2(), Truncation(6, 6))
        by_degree = words_by_degree(dgl)
        with self.assertLogs('apps.linear.complexes', level='DEBUG') as logs:
            h = block_homology(dgl, by_degree.get(2, []), by_degree.get(3, []), by_degree.get(4, []), 3)
        self.assertEqual(h.degree, 3)
        self.assertIn('homology degree 3:', logs.output[-1])

    def test_document(self):
        """Test the table document layout."""
        model = build_G(catalog.sphere(2), Truncation(4, 4))
        document = homotopy_groups(model).document(model.algebra)
        row = document['homotopy'][1]
        self.assertEqual(row['n'], 2)
        self.assertEqual(row['dim'], 1)
        self.assertEqual(row['weights'], {'2': 1})
        self.assertTrue(row['stable'])


class WhiteheadBracketTestCase(SimpleTestCase):
    """Test cases for whitehead_bracket."""

    def test_sphere_two_square(self):
        """Test [iota_2, iota_2] generates pi_3 of S^2."""
        model = build_G(catalog.sphere(2), Truncation(4, 4))
        x = model.algebra.generator('x')
        product = whitehead_bracket(model, x, x)
        self.assertEqual(product.n, 3)
        self.assertFalse(product.is_zero)
        self.assertEqual(product.weight, 4)

    def test_odd_sphere_square(self):
        """Test [iota_3, iota_3] vanishes rationally."""
        model = build_G(catalog.sphere(3), Truncation(6, 4))
        x = model.algebra.generator('x')
        self.assertTrue(whitehead_bracket(model, x, x).is_zero)

    def test_zero_class(self):
        """Test bracket with the zero class."""
        model = build_G(catalog.sphere(2), Truncation(4, 4))
        self.assertTrue(whitehead_bracket(model, model.algebra.generator('x'), {}).is_zero)

    def test_cp2_is_zero_in_pi3(self):
        """Test [iota_2, iota_2] is a boundary for CP^2."""
        model = build_G(catalog.cp2(), Truncation(5, 4))
        x = model.algebra.generator('x')
        product = whitehead_bracket(model, x, x)
        self.assertTrue(product.is_zero)
        self.assertEqual(product.weight, 4)

    def test_not_a_cycle(self):
        """Test a non-cycle representative is rejected."""
        model = build_G(catalog.cp2(), Truncation(5, 4))
        with self.assertRaises(NotACycle):
            whitehead_bracket(model, model.algebra.generator('y'), model.algebra.generator('x'))


class MinimalModelTestCase(SimpleTestCase):
    """Test cases for minimal_model and abelianization_homology."""

    def test_contractible_pair(self):
        """Test Db = a eliminates everything."""
        algebra = FreeLieAlgebra([('a', 1), ('b', 2)], Truncation(6, 4))
        model = FreeDGLie(algebra, {'b': algebra.generator('a')})
        result = minimal_model(model)
        self.assertEqual(len(result.model.generators), 0)
        self.assertEqual([(e.removed, e.target) for e in result.eliminations], [('b', 'a')])

    def test_minimal_is_unchanged(self):
        """Test an already minimal model is returned unchanged."""
        model = build_G(catalog.cp2(), Truncation(6, 4))
        result = minimal_model(model)
        self.assertEqual(result.eliminations, [])
        self.assertEqual(result.model.document(), model.document())

    def test_acyclic_summand(self):
        """Test an acyclic summand in degrees 2 and 3 leaves x only."""
        model = build_G(catalog.sphere_with_acyclic_pair(low=2), Truncation(5, 5))
        self.assertFalse(model.is_minimal())
        result = minimal_model(model)
        self.assertEqual(list(result.model.generators), [('x', 1)])
        self.assertTrue(result.model.is_minimal())

    def test_acyclic_summand_homotopy(self):
        """Test homotopy is unchanged by elimination and matches S^2."""
        t = Truncation(5, 5)
        model = build_G(catalog.sphere_with_acyclic_pair(low=2), t)
        expected = homotopy_groups(build_G(catalog.sphere(2), t)).dims()
        self.assertEqual(homotopy_groups(model).dims(), expected)
        self.assertEqual(homotopy_groups(minimal_model(model).model).dims(), expected)

    def test_circle_model(self):
        """Test the circle model reduces to one degree-0 generator."""
        model = build_Gbar(catalog.circle_model(), Truncation(3, 3))
        result = minimal_model(model)
        self.assertEqual(list(result.model.generators), [('a', 0)])

    def test_abelianization(self):
        """Test abelianization homology is reduced cohomology shifted down."""
        cases = [
            (catalog.surface(2), {0: 4, 1: 1}),
            (catalog.cp2(), {1: 1, 3: 1}),
            (catalog.sphere_with_acyclic_pair(low=2), {1: 1}),
        ]
        for ring, expected in cases:
            model = build_G(ring, Truncation(3, 2))
            self.assertEqual(abelianization_homology(model), expected, ring.name)


class AdamsPageTestCase(SimpleTestCase):
    """Test cases for adams_E1."""

    def test_sphere_two(self):
        """Test the E1 page of S^2."""
        page = adams_E1(catalog.sphere(2), Truncation(4, 4))
        self.assertEqual(nonzero(page.E1), {(-1, 2): 1, (-2, 4): 1})

    def test_odd_sphere(self):
        """Test the E1 page of S^3."""
        page = adams_E1(catalog.sphere(3), Truncation(4, 4))
        self.assertEqual(nonzero(page.E1), {(-1, 3): 1})

    def test_cp2_d1(self):
        """Test d1 on y is the transposed square of x."""
        page = adams_E1(catalog.cp2(), Truncation(6, 4))
        self.assertEqual(page.d1[(-1, 4)], Matrix([[-1]]))

    def test_torus_d1(self):
        """Test d1 on w is the transposed product a * b."""
        page = adams_E1(catalog.torus(), Truncation(3, 3))
        self.assertEqual(page.d1[(-1, 2)], Matrix([[-1]]))

    def test_lie_weight_oracle(self):
        """Test E1 dimensions against lie_weight_dims."""
        t = Truncation(6, 4)
        ring = catalog.cp2()
        page = adams_E1(ring, t)
        generators = build_G(ring, t).generators
        for w in range(1, 5):
            for k, dim in lie_weight_dims(generators, w, t).items():
                self.assertEqual(page.dimension(-w, k + w), dim)

    def test_abutment(self):
        """Test E2 matches homotopy where d1 resolves the page."""
        for ring in (catalog.sphere(2), catalog.sphere(3), catalog.cp2()):
            t = Truncation(7, 6)
            page = adams_E1(ring, t)
            table = homotopy_groups(build_G(ring, t))
            self.assertEqual(page.abutment_bound(), nonzero(table.dims()), ring.name)

    def test_dg_ring_uses_cohomology(self):
        """Test the acyclic summand does not show up on the page."""
        page = adams_E1(catalog.sphere_with_acyclic_pair(low=2), Truncation(4, 4))
        self.assertEqual(nonzero(page.E1), {(-1, 2): 1, (-2, 4): 1})


class ChevalleyEilenbergTestCase(SimpleTestCase):
    """Test cases for Chevalley-Eilenberg cochains."""

    def test_abelian_line(self):
        """Test Q in degree 2 gives an exterior class in degree 3."""
        algebra = FreeLieAlgebra([('v', 2)], Truncation(4, 4))
        cochains = ce_cochains(FreeDGLie(algebra, {}))
        self.assertEqual(nonzero(cochains.cohomology_dims()), {0: 1, 3: 1})

    def test_zero_algebra(self):
        """Test the zero Lie algebra has cohomology Q in degree 0."""
        algebra = FreeLieAlgebra([], Truncation(3, 3))
        cochains = ce_cochains(FreeDGLie(algebra, {}))
        self.assertEqual(nonzero(cochains.cohomology_dims()), {0: 1})

    def test_sphere_two_differential(self):
        """Test D of the dual of the square is minus the square of the dual of x."""
        cochains = ce_cochains(build_G(catalog.sphere(2), Truncation(4, 4)))
        x, square = cochains.words.index(LieWord((0,), False)), cochains.words.index(LieWord((0,), True))
        self.assertEqual(cochains.generator_images[square], {(x, x): Fraction(-1)})
        self.assertEqual(cochains.generator_images[x], {})

    def test_round_trip(self):
        """Test cohomology of the cochains of the model recovers the ring."""
        for ring in (catalog.sphere(2), catalog.sphere(3), catalog.cp2()):
            result = round_trip(ring, Truncation(8, 8))
            self.assertEqual(result.bound, 8)
            self.assertTrue(result.ok, result.document())

    def test_round_trip_torus(self):
        """Test the torus round trip in a smaller window."""
        result = round_trip(catalog.torus(), Truncation(4, 4))
        self.assertEqual(result.found, {0: 1, 1: 2, 2: 1, 3: 0, 4: 0})

    def test_round_trip_torus_degree_eight(self):
        """Test the torus round trip through degree 8."""
        result = round_trip(catalog.torus(), Truncation(8, 8))
        self.assertEqual(result.bound, 8)
        self.assertTrue(result.ok, result.document())
        self.assertEqual(result.found, {0: 1, 1: 2, 2: 1, 3: 0, 4: 0, 5: 0, 6: 0, 7: 0, 8: 0})

    def test_cohomology_ring(self):
        """Test the cohomology ring of the cochains of CP^2 has x^2 != 0."""
        cochains = ce_cochains(build_G(catalog.cp2(), Truncation(6, 6)))
        ring = cochains.cohomology_ring()
        self.assertEqual(ring.dimensions(), [1, 0, 1, 0, 1])
        x = ring.indices_in_degree(2)[0]
        self.assertTrue(ring.multiply({x: 1}, {x: 1}))
