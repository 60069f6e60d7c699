"""
Tests for free graded Lie algebras.
"""

import random
from fractions import Fraction
from itertools import product

from django.test import SimpleTestCase

from apps.core.exceptions import DegreeMismatch, TruncationTooLarge
from apps.lie.algebra import FreeLieAlgebra, koszul, lie_weight_dims, tensor_multiply
from apps.lie.derivations import LieMap, extend_derivation, verify_square_zero
from apps.lie.generators import GradedGenerators, Truncation
from apps.lie.words import LieWord, is_lyndon, lyndon_basis
from apps.linear.elimination import rank
from apps.linear.vectors import add_into


def random_element(algebra, rng, degree):
    words = [b for b in algebra.basis if algebra.degree(b) == degree]
    element = {}
    for b in rng.sample(words, min(len(words), 3)):
        element[b] = Fraction(rng.randint(-3, 3))
    return {b: c for b, c in element.items() if c}


def left_normed(algebra, word):
    """Tensor expansion of [x_i1, [x_i2, [... x_in]]]."""
    degrees = algebra.generators.degrees
    poly = {(word[-1],): Fraction(1)}
    degree = degrees[word[-1]]
    for i in reversed(word[:-1]):
        x = {(i,): Fraction(1)}
        result = tensor_multiply(x, poly)
        add_into(result, tensor_multiply(poly, x), -koszul(degrees[i], degree))
        poly = result
        degree += degrees[i]
    return poly


class LyndonBasisTestCase(SimpleTestCase):
    """Test cases for the super-Lyndon basis."""

    def test_is_lyndon(self):
        """Test the Lyndon predicate."""
        self.assertTrue(is_lyndon((0, 0, 1)))
        self.assertTrue(is_lyndon((0, 1, 1)))
        self.assertFalse(is_lyndon((0, 1, 0)))
        self.assertFalse(is_lyndon((0, 0)))

    def test_even_generator(self):
        """Test one even generator spans only itself."""
        basis = lyndon_basis(GradedGenerators([('v', 2)]), Truncation(20, 4))
        self.assertEqual(basis, [LieWord((0,), False)])

    def test_odd_generator(self):
        """Test one odd generator gives v and [v, v]."""
        basis = lyndon_basis(GradedGenerators([('v', 1)]), Truncation(20, 4))
        self.assertEqual(basis, [LieWord((0,), False), LieWord((0,), True)])

    def test_witt_counts(self):
        """Test two degree-0 generators give 2, 1, 2, 3 words by weight."""
        basis = lyndon_basis(GradedGenerators([('a', 0), ('b', 0)]), Truncation(0, 4))
        counts = [sum(1 for b in basis if b.weight == w) for w in range(1, 5)]
        self.assertEqual(counts, [2, 1, 2, 3])

    def test_generator_order(self):
        """Test generators are ordered by degree then label."""
        generators = GradedGenerators([('z', 0), ('b', 1), ('a', 1)])
        self.assertEqual(generators.labels, ['z', 'a', 'b'])

    def test_guard(self):
        """Test the basis guard."""
        generators = GradedGenerators([(f'g{i}', 0) for i in range(6)])
        with self.assertRaises(TruncationTooLarge):
            lyndon_basis(generators, Truncation(0, 6), guard=100)

    def test_super_witt_oracle(self):
        """Test basis counts against ranks of left-normed brackets."""
        cases = [
            [('a', 0), ('b', 1)],
            [('a', 1), ('b', 1)],
            [('a', 1), ('b', 2), ('c', 3)],
            [('a', 0), ('b', 0), ('c', 1)],
        ]
        for pairs in cases:
            algebra = FreeLieAlgebra(pairs, Truncation(6, 4))
            k = len(algebra.generators)
            for (degree, weight), words in algebra.blocks().items():
                polys = [
                    left_normed(algebra, word)
                    for word in product(range(k), repeat=weight)
                    if algebra.generators.word_degree(word) == degree
                ]
                keys = sorted({w for p in polys for w in p})
                matrix = [[p.get(key, 0) for p in polys] for key in keys]
                self.assertEqual(rank(matrix) if keys else 0, len(words), (pairs, degree, weight))


class BracketTestCase(SimpleTestCase):
    """Test cases for brackets."""

    def test_even_square(self):
        """Test [v, v] = 0 for even v."""
        algebra = FreeLieAlgebra([('v', 2)], Truncation(10, 4))
        v = algebra.generator('v')
        self.assertEqual(algebra.bracket(v, v), {})

    def test_odd_square(self):
        """Test [v, v] = 2 * square for odd v."""
        algebra = FreeLieAlgebra([('v', 1)], Truncation(10, 4))
        v = algebra.generator('v')
        self.assertEqual(algebra.bracket(v, v), {LieWord((0,), True): 2})

    def test_left_bracket(self):
        """Test [a, [a, b]] is the Lyndon word aab."""
        algebra = FreeLieAlgebra([('a', 0), ('b', 0)], Truncation(0, 4))
        a, b = algebra.generator('a'), algebra.generator('b')
        self.assertEqual(algebra.bracket(a, algebra.bracket(a, b)), {LieWord((0, 0, 1), False): 1})

    def test_truncation_drops_terms(self):
        """Test brackets beyond the weight bound vanish."""
        algebra = FreeLieAlgebra([('a', 0), ('b', 0)], Truncation(0, 2))
        a, b = algebra.generator('a'), algebra.generator('b')
        self.assertEqual(algebra.bracket(a, algebra.bracket(a, b)), {})

    def test_laws_random(self):
        """Test antisymmetry, Jacobi and the tensor oracle on random elements."""
        rng = random.Random(3)
        algebra = FreeLieAlgebra([('a', 0), ('b', 1), ('c', 2)], Truncation(6, 5))
        for _ in range(40):
            dx, dy, dz = rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)
            x, y, z = (random_element(algebra, rng, d) for d in (dx, dy, dz))

            xy = algebra.bracket(x, y)
            yx = algebra.bracket(y, x)
            self.assertEqual(add_into(dict(xy), yx, koszul(dx, dy)), {})

            expected = tensor_multiply(algebra.expand_element(x), algebra.expand_element(y))
            add_into(expected, tensor_multiply(algebra.expand_element(y), algebra.expand_element(x)), -koszul(dx, dy))
            expected = {
                w: c for w, c in expected.items()
                if algebra.generators.word_degree(w) <= 6 and len(w) <= 5
            }
            self.assertEqual(algebra.expand_element(xy), expected)

            jacobi = {}
            add_into(jacobi, algebra.bracket(x, algebra.bracket(y, z)), koszul(dx, dz))
            add_into(jacobi, algebra.bracket(y, algebra.bracket(z, x)), koszul(dy, dx))
            add_into(jacobi, algebra.bracket(z, algebra.bracket(x, y)), koszul(dz, dy))
            self.assertEqual(jacobi, {})


class LieWeightDimsTestCase(SimpleTestCase):
    """Test cases for lie_weight_dims."""

    def test_odd_line(self):
        """Test Q in degree 1 at weight 2."""
        self.assertEqual(lie_weight_dims([('v', 1)], 2, Truncation(10, 4)), {2: 1})

    def test_even_line(self):
        """Test Q in degree 2 at weight 2."""
        self.assertEqual(lie_weight_dims([('v', 2)], 2, Truncation(10, 4)), {})

    def test_witt_formula(self):
        """Test Q^4 in degree 0 at weight 3."""
        self.assertEqual(lie_weight_dims({0: 4}, 3, Truncation(0, 4)), {0: 20})


class DerivationTestCase(SimpleTestCase):
    """Test cases for derivations and Lie maps."""

    def test_zero_derivation(self):
        """Test zero images give the zero derivation."""
        algebra = FreeLieAlgebra([('a', 0), ('b', 1)], Truncation(4, 4))
        d = extend_derivation(algebra, {})
        for b in algebra.basis:
            self.assertEqual(d.on_basis(b), {})

    def test_cp2_leibniz(self):
        """Test D[v, w] = 0 when Dw = c[v, v]."""
        algebra = FreeLieAlgebra([('v', 1), ('w', 3)], Truncation(8, 4))
        v = algebra.generator('v')
        d = extend_derivation(algebra, {'w': {k: 3 * c for k, c in algebra.bracket(v, v).items()}})
        self.assertEqual(d(algebra.bracket(v, algebra.generator('w'))), {})
        self.assertIsNone(verify_square_zero(d))

    def test_leibniz_rule(self):
        """Test the graded Leibniz rule on random pairs."""
        rng = random.Random(5)
        algebra = FreeLieAlgebra([('a', 0), ('b', 1), ('c', 2)], Truncation(6, 4))
        a, b = algebra.generator('a'), algebra.generator('b')
        d = extend_derivation(algebra, {'b': {k: -c for k, c in a.items()}, 'c': algebra.bracket(a, b)})
        for _ in range(20):
            dx, dy = rng.randint(0, 2), rng.randint(0, 2)
            x, y = random_element(algebra, rng, dx), random_element(algebra, rng, dy)
            left = d(algebra.bracket(x, y))
            right = algebra.bracket(d(x), y)
            add_into(right, algebra.bracket(x, d(y)), koszul(-1, dx))
            self.assertEqual(left, right)

    def test_square_nonzero_reported(self):
        """Test verify_square_zero reports the first failing word."""
        algebra = FreeLieAlgebra([('a', 0), ('b', 1), ('c', 2)], Truncation(3, 3))
        d = extend_derivation(algebra, {'b': algebra.generator('a'), 'c': algebra.generator('b')})
        self.assertEqual(verify_square_zero(d), LieWord((2,), False))

    def test_degree_mismatch(self):
        """Test images of the wrong degree."""
        algebra = FreeLieAlgebra([('a', 0), ('b', 1)], Truncation(3, 3))
        with self.assertRaises(DegreeMismatch):
            extend_derivation(algebra, {'b': algebra.generator('b')})

    def test_lie_map(self):
        """Test a generator substitution is a homomorphism."""
        source = FreeLieAlgebra([('x', 1), ('y', 1)], Truncation(6, 4))
        target = FreeLieAlgebra([('p', 1), ('q', 1)], Truncation(6, 4))
        p, q = target.generator('p'), target.generator('q')
        phi = LieMap(source, target, {'x': add_into(dict(p), q), 'y': add_into(dict(p), q, -1)})
        x, y = source.generator('x'), source.generator('y')
        for u, v in ((x, y), (x, x), (y, source.bracket(x, y))):
            self.assertEqual(phi(source.bracket(u, v)), target.bracket(phi(u), phi(v)))
