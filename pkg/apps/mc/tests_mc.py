"""
Tests for Maurer-Cartan elements, gauge actions, BCH and the MC solver.
"""

import random
from fractions import Fraction

from django.test import SimpleTestCase

from apps.core.exceptions import DegreeMismatch, NotMC
from apps.lie.algebra import FreeLieAlgebra
from apps.lie.generators import Truncation
from apps.lie.words import LieWord, letter
from apps.linear.vectors import add_into, add_term, scale
from apps.mc.bch import bch, bch_evaluate, bch_polynomial
from apps.mc.envelope import TensorEnvelope
from apps.mc.gauge import compose, gauge_act, inverse, is_mc
from apps.mc.solve import mc_solve
from apps.mc.tensor import TensorDGLA
from apps.quillen.construction import build_G
from apps.quillen.dgl import FreeDGLie
from apps.rings import catalog


def abelian_pair():
    """Free dg Lie algebra on p (0), q (1) with Dq = p, cut at weight 1."""
    algebra = FreeLieAlgebra([('p', 0), ('q', 1)], Truncation(3, 1))
    return FreeDGLie(algebra, {'q': algebra.generator('p')}, name='pair')


def random_parameter(tensor, rng, terms=4):
    """Random element of total degree 0."""
    keys = [
        (i, b)
        for b in tensor.algebra.basis
        for i in range(len(tensor.ring))
        if tensor.key_degree((i, b)) == 0 and b.weight > 0
    ]
    u = {}
    for key in rng.sample(keys, min(terms, len(keys))):
        add_term(u, key, Fraction(rng.randint(-2, 2)))
    return u


class MaurerCartanTestCase(SimpleTestCase):
    """Test cases for is_mc."""

    def test_zero(self):
        """Test the zero element is Maurer-Cartan."""
        ring = catalog.cp2()
        verdict = is_mc(ring, build_G(ring, Truncation(7, 4)), {})
        self.assertTrue(verdict.ok)
        self.assertEqual(verdict.residual, {})

    def test_abelian_closed_element(self):
        """Test a closed element of an abelian algebra is Maurer-Cartan."""
        tensor = TensorDGLA(catalog.torus(), abelian_pair())
        omega = tensor.element({'b': tensor.algebra.generator('p')})
        self.assertTrue(is_mc(tensor, None, omega))

    def test_tautological_elements(self):
        """Test the generator pairing is Maurer-Cartan for several rings."""
        for ring, t in [
            (catalog.cp2(), Truncation(7, 4)),
            (catalog.torus(), Truncation(3, 3)),
            (catalog.surface(2), Truncation(2, 3)),
            (catalog.sphere(2), Truncation(4, 4)),
        ]:
            tensor = TensorDGLA(ring, build_G(ring, t))
            self.assertTrue(is_mc(tensor, None, tensor.tautological_element()), ring.name)

    def test_residual_reported(self):
        """Test a single x (x) x on CP^2 leaves the residual y (x) [x, x] / 2."""
        ring = catalog.cp2()
        tensor = TensorDGLA(ring, build_G(ring, Truncation(7, 4)))
        omega = tensor.element({'x': tensor.algebra.generator('x')})
        verdict = is_mc(tensor, None, omega)
        self.assertFalse(verdict.ok)
        self.assertEqual(verdict.residual, {(ring.index('y'), LieWord((0,), True)): Fraction(1)})

    def test_degree_mismatch(self):
        """Test components of the wrong total degree are rejected."""
        ring = catalog.cp2()
        tensor = TensorDGLA(ring, build_G(ring, Truncation(7, 4)))
        omega = tensor.element({'y': tensor.algebra.generator('x')})
        with self.assertRaises(DegreeMismatch):
            is_mc(tensor, None, omega)


class GaugeActionTestCase(SimpleTestCase):
    """Test cases for gauge_act, compose and inverse."""

    def setUp(self):
        ring = catalog.torus()
        self.tensor = TensorDGLA(ring, build_G(ring, Truncation(3, 3)))
        self.omega = self.tensor.tautological_element()

    def test_identity(self):
        """Test exp(0) acts trivially."""
        self.assertEqual(gauge_act(self.tensor, None, {}, self.omega), self.omega)

    def test_abelian_formula(self):
        """Test the action reduces to omega - du in an abelian algebra."""
        tensor = TensorDGLA(catalog.torus(), abelian_pair())
        algebra = tensor.algebra
        u = tensor.element({'a': algebra.generator('q')})
        omega = tensor.element({'b': algebra.generator('p')})
        expected = tensor.element({'b': algebra.generator('p'), 'a': algebra.generator('p')})
        self.assertEqual(gauge_act(tensor, None, u, omega), expected)
        self.assertEqual(gauge_act(tensor, None, u, omega), add_into(dict(omega), tensor.d(u), -1))

    def test_inverse_law(self):
        """Test acting by u and then by its inverse returns omega."""
        rng = random.Random(7)
        for _ in range(3):
            u = random_parameter(self.tensor, rng)
            moved = gauge_act(self.tensor, None, u, self.omega)
            self.assertEqual(gauge_act(self.tensor, None, inverse(u), moved), self.omega)

    def test_composition_law(self):
        """Test the action of a product is the composite action."""
        rng = random.Random(11)
        for _ in range(3):
            u = random_parameter(self.tensor, rng)
            v = random_parameter(self.tensor, rng)
            left = gauge_act(self.tensor, None, compose(self.tensor, None, u, v), self.omega)
            right = gauge_act(self.tensor, None, u, gauge_act(self.tensor, None, v, self.omega))
            self.assertEqual(left, right)

    def test_result_is_mc(self):
        """Test gauge-moved elements pass is_mc."""
        rng = random.Random(3)
        for _ in range(5):
            moved = gauge_act(self.tensor, None, random_parameter(self.tensor, rng), self.omega)
            self.assertTrue(is_mc(self.tensor, None, moved))

    def test_rejects_non_mc(self):
        """Test NotMC for an input outside the Maurer-Cartan set."""
        ring = catalog.cp2()
        tensor = TensorDGLA(ring, build_G(ring, Truncation(7, 4)))
        omega = tensor.element({'x': tensor.algebra.generator('x')})
        with self.assertRaises(NotMC):
            gauge_act(tensor, None, {}, omega)


class BCHTestCase(SimpleTestCase):
    """Test cases for bch."""

    def test_weight_one(self):
        """Test bch(x, y) = x + y at weight 1."""
        _, series = bch_polynomial(1)
        self.assertEqual(series, {letter(0): 1, letter(1): 1})

    def test_weight_two(self):
        """Test the [x, y] / 2 term."""
        _, series = bch_polynomial(2)
        self.assertEqual(series, {letter(0): 1, letter(1): 1, LieWord((0, 1), False): Fraction(1, 2)})

    def test_weight_three(self):
        """Test the weight-3 terms [x, [x, y]] / 12 and [[x, y], y] / 12."""
        _, series = bch_polynomial(3)
        self.assertEqual(series[LieWord((0, 0, 1), False)], Fraction(1, 12))
        self.assertEqual(series[LieWord((0, 1, 1), False)], Fraction(1, 12))
        self.assertEqual(len(series), 5)

    def test_inverse(self):
        """Test bch(x, -x) = 0."""
        algebra = FreeLieAlgebra([('x', 0), ('y', 0)], Truncation(0, 5))
        x = add_into(algebra.generator('x'), algebra.bracket(algebra.generator('x'), algebra.generator('y')), 3)
        self.assertEqual(bch(algebra, x, scale(x, -1)), {})

    def test_associativity(self):
        """Test bch(x, bch(y, z)) = bch(bch(x, y), z)."""
        algebra = FreeLieAlgebra([('x', 0), ('y', 0), ('z', 0)], Truncation(0, 4))
        x, y, z = (algebra.generator(label) for label in 'xyz')
        self.assertEqual(
            bch(algebra, x, bch(algebra, y, z)),
            bch(algebra, bch(algebra, x, y), z),
        )

    def test_window_override(self):
        """Test ``t`` narrows the truncation."""
        algebra, _ = bch_polynomial(4)
        series = bch(algebra, algebra.generator('x'), algebra.generator('y'), t=Truncation(0, 2))
        self.assertEqual(max(b.weight for b in series), 2)

    def test_odd_degree_rejected(self):
        """Test odd components raise DegreeMismatch."""
        algebra = FreeLieAlgebra([('x', 1)], Truncation(4, 2))
        with self.assertRaises(DegreeMismatch):
            bch(algebra, algebra.generator('x'), algebra.generator('x'))

    def test_evaluate_matches_envelope(self):
        """Test the universal series evaluated by brackets agrees with the envelope."""
        algebra = FreeLieAlgebra([('x', 0), ('y', 0), ('z', 0)], Truncation(0, 4))
        x = algebra.generator('x')
        y = add_into(algebra.generator('y'), algebra.generator('z'), 2)
        self.assertEqual(bch_evaluate(algebra.bracket, x, y, 4), bch(algebra, x, y))
        self.assertEqual(bch_evaluate(algebra.bracket, x, y, 1), add_into(dict(x), y))

    def test_exp_log_round_trip(self):
        """Test log(exp(X)) = X at every weight up to 6."""
        rng = random.Random(5)
        ring = catalog.point()
        for weight in range(1, 7):
            algebra = FreeLieAlgebra([('x', 0), ('y', 0)], Truncation(0, weight))
            envelope = TensorEnvelope(ring, algebra)
            element = {}
            for b in algebra.basis:
                if b.weight <= 2:
                    add_term(element, (0, b), Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
            X = envelope.embed(element)
            self.assertEqual(envelope.log(envelope.exp(X)), X)
            self.assertEqual(envelope.project(X), element)


class MCSolveTestCase(SimpleTestCase):
    """Test cases for mc_solve."""

    def test_zero_seed(self):
        """Test the zero seed solves to zero."""
        ring = catalog.cp2()
        solution = mc_solve(ring, build_G(ring, Truncation(7, 4)), {})
        self.assertTrue(solution.ok)
        self.assertEqual(solution.element, {})

    def test_abelian_closed_seed(self):
        """Test a closed seed in an abelian algebra is already a solution."""
        tensor = TensorDGLA(catalog.torus(), abelian_pair())
        seed = tensor.element({'a': tensor.algebra.generator('p')})
        self.assertEqual(mc_solve(tensor, None, seed).element, seed)

    def test_sphere_two(self):
        """Test x (x) x completes on H*(S^2) since x * x = 0."""
        ring = catalog.sphere(2)
        tensor = TensorDGLA(ring, build_G(ring, Truncation(4, 4)))
        seed = tensor.element({'x': tensor.algebra.generator('x')})
        solution = mc_solve(tensor, None, seed)
        self.assertTrue(solution.ok)
        self.assertEqual(solution.element, seed)

    def test_cp2_obstruction(self):
        """Test x (x) x alone is obstructed at weight 2 on CP^2."""
        ring = catalog.cp2()
        tensor = TensorDGLA(ring, build_G(ring, Truncation(7, 4)))
        seed = tensor.element({'x': tensor.algebra.generator('x')})
        solution = mc_solve(tensor, None, seed)
        self.assertFalse(solution.ok)
        self.assertEqual(solution.obstruction['weight'], 2)
        self.assertEqual(solution.document(tensor)['obstruction']['residual'], {'y': {'[x,x]': '1'}})

    def test_killed_square(self):
        """Test a homotopically trivial square is corrected by -p (x) [x, x] / 2."""
        ring = catalog.killed_square()
        tensor = TensorDGLA(ring, build_G(catalog.cp2(), Truncation(7, 4)))
        seed = tensor.element({'x': tensor.algebra.generator('x')})
        solution = mc_solve(tensor, None, seed)
        self.assertTrue(solution.ok)
        expected = tensor.element({
            'x': tensor.algebra.generator('x'),
            'p': {LieWord((0,), True): -1},
        })
        self.assertEqual(solution.element, expected)
        self.assertTrue(is_mc(tensor, None, solution.element))
