"""
Tests for Dold-Kan denormalization, shuffle products and the transport of
Maurer-Cartan elements and gauges.
"""

import random
from fractions import Fraction
from itertools import product

from django.test import SimpleTestCase

from apps.core.exceptions import NotMC, ParseError
from apps.doldkan.cosimplicial import denormalize, normalize
from apps.doldkan.shuffle_algebra import shuffle_algebra
from apps.doldkan.shuffles import shuffles
from apps.doldkan.simplicial_lie import AbelianLie, ConstantLie, NerveTensorLie, normalize_lie
from apps.doldkan.transport import (
    abelian_mc_dimensions,
    check_simplicial_mc,
    constant_gauge_lift,
    constant_lift,
    from_normalized,
    gauge_compatibility,
    gauge_multiply,
    gauge_normalize,
    mc_normalize,
    normalized_tensor,
    push_lie,
    push_ring,
)
from apps.doldkan.verification import CHECKS, FAMILIES, coefficient_algebra, random_instance, verify_transport
from apps.lie.algebra import FreeLieAlgebra
from apps.lie.generators import Truncation
from apps.linear.complexes import CHAIN, COCHAIN, ChainComplexQ
from apps.linear.elimination import kernel_basis
from apps.linear.matrix import Matrix
from apps.linear.vectors import add_into
from apps.mc.gauge import compose, gauge_act, is_mc
from apps.mc.solve import mc_solve
from apps.mc.tensor import TensorDGLA
from apps.quillen.dgl import FreeDGLie
from apps.rings import catalog
from apps.rings.cohomology import ring_cochains
from apps.rings.ring import build_ring


def two_step():
    """Free Lie algebra on X, Y in degree 0 modulo brackets of length 3."""
    return FreeLieAlgebra([('X', 0), ('Y', 0)], Truncation(0, 2))


def vector(ring, components):
    return {ring.index(label): Fraction(c) for label, c in components.items()}


def combination(rng, columns, length):
    row = [Fraction(0)] * length
    for column in columns:
        c = rng.randint(-2, 2)
        if c:
            row = [x + c * y for x, y in zip(row, column)]
    return row


def random_cochain_complex(rng, top=6, width=4):
    """Cochain complex in degrees up to top; rows of d_n are drawn from the left kernel of d_(n-1)."""
    dims = [rng.randint(0, width) for _ in range(rng.randint(0, top) + 1)]
    bases = {n: [f'e{n}_{k}' for k in range(dim)] for n, dim in enumerate(dims)}
    differentials = {}
    for n in range(len(dims) - 1):
        if n == 0:
            space = Matrix.identity(dims[0]).columns()
        else:
            space = kernel_basis(differentials[n - 1].transpose()).columns()
        differentials[n] = Matrix([combination(rng, space, dims[n]) for _ in range(dims[n + 1])], dims[n])
    return ChainComplexQ(bases, differentials, degree=COCHAIN)


def odd_pairing():
    """Classes a, c in degrees 1 and 5 with ac = w = -ca in degree 6."""
    return build_ring(
        [('1', 0), ('a', 1), ('c', 5), ('w', 6)], '1',
        [('a', 'c', {'w': 1}), ('c', 'a', {'w': -1})],
        name='odd_pairing',
    ).validate()


def random_element(rng, basis):
    return {key: Fraction(rng.choice((-2, -1, 1, 2))) for key in rng.sample(basis, min(3, len(basis)))}


class ShufflesTestCase(SimpleTestCase):
    """Test cases for shuffles."""

    def test_one_one(self):
        """Test the two (1, 1)-shuffles carry opposite signs."""
        self.assertEqual(set(shuffles(1, 1)), {((0,), (1,), 1), ((1,), (0,), -1)})

    def test_counts(self):
        """Test there are binomially many shuffles."""
        self.assertEqual(len(shuffles(2, 1)), 3)
        self.assertEqual(len(shuffles(2, 2)), 6)
        self.assertEqual(shuffles(0, 0), (((), (), 1),))


class DenormalizationTestCase(SimpleTestCase):
    """Test cases for denormalize and normalize."""

    def test_constant(self):
        """Test Q in degree 0 gives the constant cosimplicial Q."""
        module = denormalize(ChainComplexQ({0: ['v']}, degree=COCHAIN), top=4)
        self.assertEqual([module.dimension(n) for n in range(5)], [1, 1, 1, 1, 1])
        self.assertEqual(module.coface(0, 2, {((1, 2), (0, 0)): 1}), {((1, 2, 3), (0, 0)): 1})
        self.assertEqual(normalize(module).complex.bases, {0: ['v'], 1: [], 2: [], 3: [], 4: []})

    def test_dimensions(self):
        """Test dim D^n = n for Q[1] and n(n - 1) / 2 for Q[2]."""
        one = denormalize(ChainComplexQ({1: ['v']}, degree=COCHAIN), top=5)
        two = denormalize(ChainComplexQ({2: ['v']}, degree=COCHAIN), top=5)
        self.assertEqual([one.dimension(n) for n in range(6)], [0, 1, 2, 3, 4, 5])
        self.assertEqual([two.dimension(n) for n in range(6)], [0, 0, 1, 3, 6, 10])

    def test_identities(self):
        """Test the cosimplicial identities for a complex with a differential."""
        complex_ = ChainComplexQ({0: ['a', 'b'], 1: ['c']}, {0: [[1, 0]]}, degree=COCHAIN)
        denormalize(complex_, top=4).check_identities()
        denormalize(ring_cochains(catalog.circle_model()), top=3).check_identities()

    def test_round_trip(self):
        """Test N(D(V)) = V on the nose."""
        for ring in [catalog.circle_model(), catalog.torus(), catalog.sphere(4), catalog.killed_square()]:
            complex_ = ring_cochains(ring)
            normalized = normalize(denormalize(complex_)).complex
            for n in complex_.degrees:
                self.assertEqual(normalized.basis(n), complex_.basis(n), ring.name)
                if n + 1 in complex_.degrees:
                    self.assertEqual(normalized.differential(n), complex_.differential(n), ring.name)

    def test_round_trip_random(self):
        """Test N(D(V)) = V for seeded random complexes in degrees up to 6."""
        for seed in range(200):
            complex_ = random_cochain_complex(random.Random(seed))
            top = max(complex_.degrees)
            normalized = normalize(denormalize(complex_, top=top)).complex
            for n in range(top + 1):
                self.assertEqual(normalized.basis(n), complex_.basis(n), seed)
            for n in range(top):
                self.assertEqual(normalized.differential(n), complex_.differential(n), seed)

    def test_random_complexes_nontrivial(self):
        """Test the random complexes carry nonzero differentials."""
        differentials = [random_cochain_complex(random.Random(seed)).differentials for seed in range(200)]
        self.assertTrue(any(not m.is_zero() for d in differentials for m in d.values()))

    def test_labels(self):
        """Test summands are labelled by their cofaces."""
        module = denormalize(ChainComplexQ({1: ['v']}, degree=COCHAIN), top=3)
        self.assertEqual([module.label(key) for key in module.basis(2)], ['d1(v)', 'd2(v)'])


class ShuffleAlgebraTestCase(SimpleTestCase):
    """Test cases for shuffle_algebra."""

    def setUp(self):
        self.ring = catalog.torus()
        self.algebra = shuffle_algebra(self.ring, top=3)

    def test_point(self):
        """Test the point gives the constant algebra."""
        algebra = shuffle_algebra(catalog.point(), top=3)
        for n in range(4):
            self.assertEqual(algebra.basis(n), list(algebra.unit(n)))
            self.assertEqual(algebra.multiply(n, algebra.unit(n), algebra.unit(n)), algebra.unit(n))

    def test_cup_recovers_product(self):
        """Test front and back faces multiply to ab = w and ba = -w."""
        a, b = vector(self.ring, {'a': 1}), vector(self.ring, {'b': 1})
        self.assertEqual(self.algebra.cup(1, a, 1, b), vector(self.ring, {'w': 1}))
        self.assertEqual(self.algebra.cup(1, b, 1, a), vector(self.ring, {'w': -1}))
        self.assertEqual(self.algebra.cup(1, a, 1, a), {})

    def test_sphere_square(self):
        """Test x * x = 0 for H*(S^2) at every placement."""
        ring = catalog.sphere(2)
        algebra = shuffle_algebra(ring, top=4)
        x = vector(ring, {'x': 1})
        self.assertEqual(algebra.cup(2, x, 2, x), {})
        self.assertEqual(algebra.cup(2, x, 0, vector(ring, {'1': 1})), x)
        lifts = [key for key in algebra.basis(3) if key[1] == ring.index('x')]
        self.assertEqual(len(lifts), 3)
        for left, right in product(lifts, repeat=2):
            self.assertEqual(algebra.multiply_basis(3, left, right), {})

    def test_unit(self):
        """Test the unit of each level."""
        for n in range(3):
            for key in self.algebra.basis(n):
                self.assertEqual(self.algebra.multiply(n, self.algebra.unit(n), {key: 1}), {key: 1})

    def test_commutative_and_associative(self):
        """Test each level is a commutative associative algebra."""
        basis = self.algebra.basis(2)
        for x, y in product(basis, repeat=2):
            self.assertEqual(self.algebra.multiply_basis(2, x, y), self.algebra.multiply_basis(2, y, x))
        for x, y, z in product(basis, repeat=3):
            self.assertEqual(
                self.algebra.multiply(2, self.algebra.multiply_basis(2, x, y), {z: 1}),
                self.algebra.multiply(2, {x: 1}, self.algebra.multiply_basis(2, y, z)),
            )

    def test_associative_random(self):
        """Test associativity on random level-3 elements."""
        rng = random.Random(13)
        basis = self.algebra.basis(3)
        for _ in range(5):
            x, y, z = (
                {key: Fraction(rng.choice((-2, -1, 1, 2))) for key in rng.sample(basis, 3)}
                for _ in range(3)
            )
            m = self.algebra.multiply
            self.assertEqual(m(3, m(3, x, y), z), m(3, x, m(3, y, z)))

    def test_structure_maps_multiplicative(self):
        """Test cofaces and codegeneracies are algebra maps."""
        algebra = self.algebra
        for x, y in product(algebra.basis(1), repeat=2):
            for i in range(3):
                self.assertEqual(
                    algebra.coface(i, 1, algebra.multiply_basis(1, x, y)),
                    algebra.multiply(2, algebra.coface(i, 1, {x: 1}), algebra.coface(i, 1, {y: 1})),
                )
        for x, y in product(algebra.basis(2), repeat=2):
            for i in range(2):
                self.assertEqual(
                    algebra.codegeneracy(i, 2, algebra.multiply_basis(2, x, y)),
                    algebra.multiply(1, algebra.codegeneracy(i, 2, {x: 1}), algebra.codegeneracy(i, 2, {y: 1})),
                )

    def test_levels_up_to_six(self):
        """Test every level up to 6 is commutative and associative on random elements."""
        rng = random.Random(29)
        for ring in [catalog.sphere(1), odd_pairing()]:
            algebra = shuffle_algebra(ring, top=6)
            m = algebra.multiply
            for n in range(7):
                basis = algebra.basis(n)
                for _ in range(3):
                    x, y, z = (random_element(rng, basis) for _ in range(3))
                    self.assertEqual(m(n, x, y), m(n, y, x), (ring.name, n))
                    self.assertEqual(m(n, m(n, x, y), z), m(n, x, m(n, y, z)), (ring.name, n))

    def test_cup_graded_commutative(self):
        """Test cup(p, x, q, y) = (-1)^(pq) cup(q, y, p, x) up to level 6."""
        ring = odd_pairing()
        algebra = shuffle_algebra(ring, top=6)
        for i, j in product(range(len(ring.labels)), repeat=2):
            p, q = ring.degrees[i], ring.degrees[j]
            if p + q > 6:
                continue
            sign = -1 if p * q % 2 else 1
            expected = {k: sign * c for k, c in algebra.cup(q, {j: 1}, p, {i: 1}).items()}
            self.assertEqual(algebra.cup(p, {i: 1}, q, {j: 1}), expected, (ring.labels[i], ring.labels[j]))

    def test_cup_top_level(self):
        """Test the degree 1 and degree 5 classes multiply at level 6."""
        ring = odd_pairing()
        algebra = shuffle_algebra(ring, top=6)
        a, c = vector(ring, {'a': 1}), vector(ring, {'c': 1})
        self.assertEqual(algebra.cup(1, a, 5, c), vector(ring, {'w': 1}))
        self.assertEqual(algebra.cup(5, c, 1, a), vector(ring, {'w': -1}))


class NormalizeLieTestCase(SimpleTestCase):
    """Test cases for simplicial Lie algebras and normalize_lie."""

    def test_abelian(self):
        """Test N of the Dold-Kan space of dq = p recovers the complex with zero bracket."""
        complex_ = ChainComplexQ({0: ['p'], 1: ['q']}, {1: [[1]]}, degree=CHAIN)
        g = AbelianLie(complex_, top=3)
        g.verify()
        ng = normalize_lie(g, 2)
        self.assertEqual(ng.dimensions(), [1, 1, 0])
        self.assertEqual(ng.bases[1], ['q'])
        self.assertEqual(ng.differential.on_basis((1, 0)), {(0, 0): 1})
        self.assertEqual(ng.bracket({(1, 0): 1}, {(0, 0): 1}), {})
        ng.check_axioms()

    def test_constant(self):
        """Test N of a constant algebra is the algebra in degree 0."""
        h = two_step()
        g = ConstantLie(h, top=2)
        g.verify()
        ng = normalize_lie(g)
        self.assertEqual(ng.dimensions(), [3, 0, 0])
        x, y = h.generator('X'), h.generator('Y')
        expected = h.bracket(x, y)
        bracket = ng.bracket({(0, ng.lifts[0].index(b)): c for b, c in x.items()},
                             {(0, ng.lifts[0].index(b)): c for b, c in y.items()})
        self.assertEqual({ng.lifts[0][k]: c for (_, k), c in bracket.items()}, expected)

    def test_nerve_tensor(self):
        """Test the shuffle bracket satisfies the dg Lie axioms on Q[B(Z/2)] (x) h."""
        g = NerveTensorLie(two_step(), 2, top=3)
        g.verify()
        ng = normalize_lie(g)
        self.assertEqual(ng.dimensions(), [3, 3, 3, 3])
        ng.check_axioms()
        self.assertTrue(any(ng.bracket({a: 1}, {b: 1}) for a in ng.basis for b in ng.basis if a[0] == 1))

    def test_constant_matches_free_bracket(self):
        """Test the shuffle bracket on N of a constant weight-3 algebra is its free bracket."""
        h = FreeLieAlgebra([('X', 0), ('Y', 0)], Truncation(0, 3))
        ng = normalize_lie(ConstantLie(h, top=2))
        self.assertEqual(ng.dimensions(), [len(h.basis), 0, 0])
        position = {b: k for k, b in enumerate(ng.lifts[0])}
        for a, b in product(h.basis, repeat=2):
            bracket = ng.bracket({(0, position[a]): 1}, {(0, position[b]): 1})
            self.assertEqual({ng.lifts[0][k]: c for (_, k), c in bracket.items()}, h.bracket({a: 1}, {b: 1}))

    def test_nerve_base_point(self):
        """Test the base point inclusion of h into Q[B(Z/2)] (x) h is simplicial and bracket preserving."""
        h = two_step()
        nerve = NerveTensorLie(h, 2, top=2)
        for n in range(3):
            table = nerve.base_point(n)
            for a, b in product(h.basis, repeat=2):
                image = {}
                for key, c in h.bracket({a: 1}, {b: 1}).items():
                    add_into(image, table[key], c)
                self.assertEqual(nerve.bracket(n, table[a], table[b]), image)
            if n:
                for i in range(n + 1):
                    self.assertEqual(nerve.face(i, n, table[h.basis[0]]), nerve.base_point(n - 1)[h.basis[0]])


class TransportTestCase(SimpleTestCase):
    """Test cases for mc_normalize and gauge_normalize."""

    def setUp(self):
        self.h = two_step()
        self.g = ConstantLie(self.h, top=2)

    def heisenberg_omega(self, ring, with_correction=True):
        x, y = self.h.generator('X'), self.h.generator('Y')
        components = {'a': x, 'b': y}
        if with_correction:
            components['c'] = {b: -c for b, c in self.h.bracket(x, y).items()}
        return TensorDGLA(ring, FreeDGLie(self.h, {}, name='h')).element(components)

    def test_trivial(self):
        """Test the zero element normalizes to zero."""
        algebra = shuffle_algebra(catalog.torus(), top=2)
        self.assertEqual(mc_normalize(algebra, self.g, {0: {}, 1: {}}), {})

    def test_constant_round_trip(self):
        """Test a lifted MC element normalizes back to itself."""
        ring = catalog.heisenberg()
        omega = self.heisenberg_omega(ring)
        self.assertTrue(is_mc(ring, FreeDGLie(self.h, {}, name='h'), omega))
        algebra = shuffle_algebra(ring, top=2)
        eta = constant_lift(algebra, omega, 1)
        self.assertTrue(check_simplicial_mc(algebra, self.g, eta))
        tensor = normalized_tensor(algebra, self.g, 1)
        self.assertEqual(from_normalized(mc_normalize(algebra, self.g, eta, tensor), tensor.dgl), omega)

    def test_solved_round_trip(self):
        """Test an MC element completed by mc_solve normalizes back to itself."""
        ring = catalog.heisenberg()
        dg = TensorDGLA(ring, FreeDGLie(self.h, {}, name='h'))
        solution = mc_solve(dg, None, dg.element({'a': self.h.generator('X'), 'b': self.h.generator('Y')}))
        self.assertTrue(solution.ok)
        omega = solution.element
        self.assertEqual(omega, self.heisenberg_omega(ring))
        algebra = shuffle_algebra(ring, top=2)
        tensor = normalized_tensor(algebra, self.g, 1)
        normalized = mc_normalize(algebra, self.g, constant_lift(algebra, omega, 1), tensor)
        self.assertTrue(is_mc(tensor, None, normalized))
        self.assertEqual(from_normalized(normalized, tensor.dgl), omega)

        u = dg.element({'1': self.h.generator('Y')})
        result = gauge_compatibility(algebra, self.g, constant_gauge_lift(algebra, u, 2), constant_lift(algebra, omega, 1))
        self.assertEqual(from_normalized(result, normalized_tensor(algebra, self.g, 2).dgl), gauge_act(dg, None, u, omega))

    def test_normalized_bracket(self):
        """Test the bracket of normalized elements agrees with the bracket of A (x) h."""
        ring = catalog.heisenberg()
        dg = TensorDGLA(ring, FreeDGLie(self.h, {}, name='h'))
        omega = self.heisenberg_omega(ring)
        u = dg.element({'1': self.h.generator('X')})
        algebra = shuffle_algebra(ring, top=2)
        tensor = normalized_tensor(algebra, self.g, 1)
        normalized = mc_normalize(algebra, self.g, constant_lift(algebra, omega, 1), tensor)
        gauge = gauge_normalize(algebra, self.g, constant_gauge_lift(algebra, u, 1), tensor)
        self.assertEqual(from_normalized(tensor.bracket(gauge, normalized), tensor.dgl), dg.bracket(u, omega))
        self.assertEqual(from_normalized(tensor.bracket(normalized, normalized), tensor.dgl), dg.bracket(omega, omega))
        self.assertTrue(dg.bracket(u, omega))

    def test_nerve_coefficients(self):
        """Test transport with coefficients in Q[B(Z/2)] (x) h through its base point."""
        ring = catalog.heisenberg()
        dg = TensorDGLA(ring, FreeDGLie(self.h, {}, name='h'))
        omega = self.heisenberg_omega(ring)
        u = dg.element({'1': self.h.generator('Y')})
        nerve = NerveTensorLie(self.h, 2, top=2)
        algebra = shuffle_algebra(ring, top=2)
        eta = push_lie(constant_lift(algebra, omega, 1), nerve.base_point)
        self.assertTrue(check_simplicial_mc(algebra, nerve, eta))
        tensor = normalized_tensor(algebra, nerve, 1)
        self.assertEqual(tensor.dgl.dimensions(), [3, 3])
        normalized = mc_normalize(algebra, nerve, eta, tensor)
        self.assertEqual(from_normalized(normalized, tensor.dgl), nerve.at_base_point(omega))

        lifted_u = push_lie(constant_gauge_lift(algebra, u, 2), nerve.base_point)
        result = gauge_compatibility(algebra, nerve, lifted_u, eta)
        self.assertEqual(
            from_normalized(result, normalized_tensor(algebra, nerve, 2).dgl),
            nerve.at_base_point(gauge_act(dg, None, u, omega)),
        )

    def test_not_mc(self):
        """Test a lift of a non-MC element fails the simplicial identities."""
        ring = catalog.heisenberg()
        algebra = shuffle_algebra(ring, top=2)
        eta = constant_lift(algebra, self.heisenberg_omega(ring, with_correction=False), 1)
        with self.assertRaises(NotMC):
            mc_normalize(algebra, self.g, eta)

    def test_abelian_dimensions(self):
        """Test simplicial and dg MC solution counts agree for abelian coefficients."""
        point_class = ChainComplexQ({0: ['v']}, degree=CHAIN)
        shifted = ChainComplexQ({1: ['v']}, degree=CHAIN)
        cases = [
            (catalog.sphere(2), shifted, (1, 1, 1)),
            (catalog.torus(), point_class, (2, 2, 2)),
            (catalog.circle_model(), point_class, (2, 2, 2)),
        ]
        for ring, complex_, expected in cases:
            algebra = shuffle_algebra(ring, top=3)
            dimensions = abelian_mc_dimensions(algebra, AbelianLie(complex_, top=3), 2)
            self.assertEqual(dimensions, expected, ring.name)

    def test_gauge_compatibility(self):
        """Test N(u)(N(omega)) = N(u * omega) on the circle model."""
        ring = catalog.circle_model()
        h = self.h
        dg = TensorDGLA(ring, FreeDGLie(h, {}, name='h'))
        omega = dg.element({'a': h.generator('X')})
        u = dg.element({'e': h.generator('Y')})
        expected = dg.element({
            'a': h.generator('X'),
            'g': h.bracket(h.generator('Y'), h.generator('X')),
            'f': {b: -c for b, c in h.generator('Y').items()},
        })
        self.assertEqual(gauge_act(dg, None, u, omega), expected)

        algebra = shuffle_algebra(ring, top=2)
        lifted_u = constant_gauge_lift(algebra, u, 2)
        result = gauge_compatibility(algebra, self.g, lifted_u, constant_lift(algebra, omega, 1))
        tensor = normalized_tensor(algebra, self.g, 2)
        self.assertEqual(from_normalized(result, tensor.dgl), expected)

    def test_gauge_identity(self):
        """Test the identity gauge normalizes to zero."""
        algebra = shuffle_algebra(catalog.circle_model(), top=2)
        self.assertEqual(gauge_normalize(algebra, self.g, {0: {}, 1: {}}), {})

    def test_gauge_homomorphism(self):
        """Test N turns the levelwise product into the dg gauge product."""
        ring = catalog.circle_model()
        algebra = shuffle_algebra(ring, top=2)
        dg = TensorDGLA(ring, FreeDGLie(self.h, {}, name='h'))
        u = constant_gauge_lift(algebra, dg.element({'e': self.h.generator('Y')}), 1)
        v = constant_gauge_lift(algebra, dg.element({'1': self.h.generator('X'), 'e': self.h.generator('X')}), 1)
        tensor = normalized_tensor(algebra, self.g, 1)
        left = gauge_normalize(algebra, self.g, gauge_multiply(algebra, self.g, u, v), tensor)
        right = compose(
            tensor, None,
            gauge_normalize(algebra, self.g, u, tensor),
            gauge_normalize(algebra, self.g, v, tensor),
        )
        self.assertEqual(left, right)

    def test_naturality_in_ring(self):
        """Test normalization commutes with the map torus -> wedge of two circles."""
        torus, wedge = catalog.torus(), catalog.wedge_of_circles(2)
        images = {
            torus.index('1'): vector(wedge, {'1': 1}),
            torus.index('a'): vector(wedge, {'a1': 1}),
            torus.index('b'): vector(wedge, {'a2': 1}),
        }
        dg = TensorDGLA(torus, FreeDGLie(self.h, {}, name='h'))
        omega = dg.element({'a': self.h.generator('X'), 'b': self.h.bracket(self.h.generator('X'), self.h.generator('Y'))})
        source = shuffle_algebra(torus, top=2)
        target = shuffle_algebra(wedge, top=2)
        eta = constant_lift(source, omega, 1)
        tensor = normalized_tensor(source, self.g, 1)
        pushed_after = {}
        for (i, b), c in mc_normalize(source, self.g, eta, tensor).items():
            for j, e in images.get(i, {}).items():
                pushed_after[(j, b)] = pushed_after.get((j, b), 0) + c * e
        pushed_before = mc_normalize(target, self.g, push_ring(eta, images), normalized_tensor(target, self.g, 1))
        self.assertEqual(pushed_before, pushed_after)

    def test_naturality_in_lie(self):
        """Test normalization commutes with the abelianization of h."""
        ring = catalog.heisenberg()
        algebra = shuffle_algebra(ring, top=2)
        abelian = FreeLieAlgebra([('X', 0), ('Y', 0)], Truncation(0, 1))
        target = ConstantLie(abelian, top=2)
        images = {b: {b: 1} for b in self.h.basis if b.weight == 1}
        eta = constant_lift(algebra, self.heisenberg_omega(ring), 1)
        source_tensor = normalized_tensor(algebra, self.g, 1)
        target_tensor = normalized_tensor(algebra, target, 1)
        before = from_normalized(mc_normalize(algebra, target, push_lie(eta, images), target_tensor), target_tensor.dgl)
        after = {}
        for (i, b), c in from_normalized(mc_normalize(algebra, self.g, eta, source_tensor), source_tensor.dgl).items():
            for b2, e in images.get(b, {}).items():
                add_into(after, {(i, b2): c * e})
        self.assertEqual(before, after)


class VerifyTransportTestCase(SimpleTestCase):
    """Test cases for verify_transport."""

    def test_clean_run(self):
        """Test a seeded run passes every check."""
        report = verify_transport(seed=7, instances=8, abelian=False)
        self.assertTrue(report.ok)
        self.assertEqual(report.checks, {name: 8 for name in CHECKS})
        self.assertIsNone(report.document()['minimal_counterexample'])

    def test_weight_three(self):
        """Test a seeded run over a weight-3 coefficient algebra passes every check."""
        report = verify_transport(seed=5, instances=4, max_weight=3, abelian=False)
        self.assertTrue(report.ok, report.document())
        self.assertEqual(report.checks, {name: 4 for name in CHECKS})

    def test_solved_instances(self):
        """Test the heisenberg instance carries the correction found by mc_solve."""
        h = coefficient_algebra()
        instances = [random_instance(random.Random(seed), h, 'heisenberg') for seed in range(10)]
        for instance in instances:
            self.assertTrue(is_mc(instance.tensor, None, instance.omega))
        c = catalog.heisenberg().index('c')
        self.assertTrue(any(i == c and b.weight == 2 for instance in instances for i, b in instance.omega))

    def test_reproducible(self):
        """Test the same seed draws the same instances."""
        h = coefficient_algebra()
        first = random_instance(random.Random(3), h, 'heisenberg')
        second = random_instance(random.Random(3), h, 'heisenberg')
        self.assertEqual(first.omega, second.omega)
        self.assertEqual(first.u, second.u)

    def test_instances_are_mc(self):
        """Test random endomorphisms keep the base elements MC."""
        rng = random.Random(11)
        h = coefficient_algebra()
        for family in FAMILIES:
            instance = random_instance(rng, h, family)
            self.assertTrue(is_mc(instance.tensor, None, instance.omega), family)
            self.assertTrue(instance.omega)

    def test_sign_fault(self):
        """Test the sign fault is caught with a smallest counterexample."""
        report = verify_transport(seed=7, instances=4, fault='sign', abelian=False)
        self.assertFalse(report.ok)
        self.assertEqual(report.checks['dg_mc'], 4)
        self.assertEqual(report.checks['mc_round_trip'], 0)
        minimal = report.minimal_counterexample()
        self.assertEqual(minimal.instance.size, min(f.instance.size for f in report.failures))
        self.assertIn('omega', report.document()['minimal_counterexample'])

    def test_unknown_fault(self):
        """Test an unknown fault name is rejected."""
        with self.assertRaises(ParseError):
            verify_transport(seed=0, instances=1, fault='swap')

    def test_abelian_only(self):
        """Test the abelian mode compares the three solution counts."""
        report = verify_transport(seed=0, abelian_only=True)
        self.assertEqual(report.instances, 0)
        self.assertEqual(
            [(row['ring'], row['simplicial']) for row in report.abelian],
            [('S2', 1), ('torus', 2), ('circle_model', 2)],
        )
        self.assertTrue(report.ok)
