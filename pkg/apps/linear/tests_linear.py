"""
Tests for exact linear algebra and homology.
"""

import random
from fractions import Fraction

from django.test import SimpleTestCase

from apps.core.exceptions import DegreeOutOfRange, NotACycle, SignConventionFailure
from apps.linear.complexes import COCHAIN, ChainComplexQ, homology
from apps.linear.elimination import rank, rank_kernel_image, solve
from apps.linear.matrix import Matrix


def hollow_triangle():
    """Simplicial chains of the boundary of a 2-simplex."""
    return ChainComplexQ(
        {0: ['0', '1', '2'], 1: ['01', '02', '12']},
        {1: [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]},
    )


class RankKernelImageTestCase(SimpleTestCase):
    """Test cases for rank, kernel and image."""

    def test_zero_matrix(self):
        """Test the zero map."""
        result = rank_kernel_image(Matrix.zeros(2, 2))
        self.assertEqual(result.rank, 0)
        self.assertEqual(result.kernel.ncols, 2)
        self.assertEqual(result.image.ncols, 0)

    def test_identity(self):
        """Test the identity map."""
        result = rank_kernel_image(Matrix.identity(3))
        self.assertEqual(result.rank, 3)
        self.assertEqual(result.kernel.ncols, 0)

    def test_rank_one(self):
        """Test a rank-one matrix with kernel spanned by (2, -1)."""
        m = Matrix([[1, 2], [2, 4]])
        result = rank_kernel_image(m)
        self.assertEqual(result.rank, 1)
        self.assertEqual(result.kernel.ncols, 1)
        k = result.kernel.column(0)
        self.assertEqual(k[0] * -1, k[1] * 2)
        self.assertTrue((m @ result.kernel).is_zero())

    def test_rank_nullity_random(self):
        """Test rank + nullity = columns on random matrices."""
        rng = random.Random(7)
        for _ in range(50):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            m = Matrix([[rng.randint(-2, 2) for _ in range(cols)] for _ in range(rows)])
            result = rank_kernel_image(m)
            self.assertEqual(result.rank + result.kernel.ncols, cols)
            self.assertEqual(rank(result.image), result.rank)
            self.assertTrue((m @ result.kernel).is_zero())

    def test_solve(self):
        """Test exact solving and inconsistency detection."""
        m = Matrix([[1, 1], [1, -1]])
        self.assertEqual(solve(m, [2, 0]), [1, 1])
        self.assertIsNone(solve(Matrix([[1, 1], [2, 2]]), [1, 3]))
        self.assertEqual(solve(Matrix([[2]]), [1]), [Fraction(1, 2)])


class HomologyTestCase(SimpleTestCase):
    """Test cases for chain complex homology."""

    def test_single_module(self):
        """Test 0 -> Q -> 0."""
        c = ChainComplexQ({0: ['x']})
        self.assertEqual(homology(c, 0).dimension, 1)

    def test_acyclic_pair(self):
        """Test Q --id--> Q."""
        c = ChainComplexQ({0: ['a'], 1: ['b']}, {1: [[1]]})
        self.assertEqual(homology(c, 0).dimension, 0)
        self.assertEqual(homology(c, 1).dimension, 0)

    def test_hollow_triangle(self):
        """Test circle homology from the hollow triangle."""
        c = hollow_triangle()
        self.assertEqual(homology(c, 0).dimension, 1)
        h1 = homology(c, 1)
        self.assertEqual(h1.dimension, 1)
        cycle = h1.representatives.column(0)
        self.assertTrue(all(x == 0 for x in c.differential(1).apply(cycle)))

    def test_out_of_range(self):
        """Test DegreeOutOfRange."""
        with self.assertRaises(DegreeOutOfRange):
            homology(hollow_triangle(), 5)

    def test_square_zero_enforced(self):
        """Test that d o d != 0 is rejected."""
        with self.assertRaises(SignConventionFailure):
            ChainComplexQ({0: ['a'], 1: ['b'], 2: ['c']}, {1: [[1]], 2: [[1]]})

    def test_cochain_complex(self):
        """Test a cochain complex of the hollow triangle."""
        chains = hollow_triangle()
        cochains = ChainComplexQ(
            {0: ['0', '1', '2'], 1: ['01', '02', '12']},
            {0: chains.differential(1).transpose()},
            degree=COCHAIN,
        )
        self.assertEqual(homology(cochains, 0).dimension, 1)
        self.assertEqual(homology(cochains, 1).dimension, 1)

    def test_coordinates(self):
        """Test class coordinates and NotACycle."""
        h1 = homology(hollow_triangle(), 1)
        rep = h1.representatives.column(0)
        self.assertEqual(h1.coordinates([2 * x for x in rep]), [2])
        with self.assertRaises(NotACycle):
            h1.coordinates([1, 0, 0])

    def test_permutation_invariance(self):
        """Test that homology does not depend on basis order."""
        rng = random.Random(11)
        base = hollow_triangle()
        d = base.differential(1)
        for _ in range(10):
            p0 = list(range(3))
            p1 = list(range(3))
            rng.shuffle(p0)
            rng.shuffle(p1)
            permuted = Matrix([[d[p0[i], p1[j]] for j in range(3)] for i in range(3)])
            c = ChainComplexQ({0: ['a', 'b', 'c'], 1: ['x', 'y', 'z']}, {1: permuted})
            self.assertEqual(homology(c, 0).dimension, 1)
            self.assertEqual(homology(c, 1).dimension, 1)
