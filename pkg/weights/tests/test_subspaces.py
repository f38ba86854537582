import numpy as np
from django.test import SimpleTestCase

from weights.subspaces import *



class GaussianBinomialTests(SimpleTestCase):

    def test_small_values(self):
        """[3 1]_5 = 31, [4 2]_5 = 806, [4 2]_2 = 35."""
        self.assertEqual(gaussian_binomial(3, 1, 5), 31)
        self.assertEqual(gaussian_binomial(4, 2, 5), 806)
        self.assertEqual(gaussian_binomial(4, 2, 2), 35)


    def test_edges(self):
        self.assertEqual(gaussian_binomial(4, 0, 3), 1)
        self.assertEqual(gaussian_binomial(4, 4, 3), 1)
        self.assertEqual(gaussian_binomial(4, 5, 3), 0)
        self.assertEqual(gaussian_binomial(4, -1, 3), 0)


    def test_symmetry(self):
        """[k r]_q = [k k-r]_q."""
        for q in (2, 3, 4):
            for r in range(5):
                self.assertEqual(gaussian_binomial(4, r, q), gaussian_binomial(4, 4 - r, q))



class EchelonEnumerationTests(SimpleTestCase):

    def test_counts_match_gaussian_binomial(self):
        """Every r-subspace of F_q^k appears once."""
        for q in (2, 3, 4):
            for r in range(4):
                with self.subTest(q=q, r=r):
                    self.assertEqual(len(echelon_bases(3, r, q)), gaussian_binomial(3, r, q))


    def test_bases_are_distinct_and_reduced(self):
        """Bases have leading ones on distinct pivots and zeroes above and below them."""
        bases = echelon_bases(3, 2, 3)
        self.assertEqual(len({b.tobytes() for b in bases}), len(bases))
        for basis in bases:
            pivots = [int(np.flatnonzero(row)[0]) for row in basis]
            self.assertEqual(pivots, sorted(set(pivots)))
            for row, pivot in enumerate(pivots):
                self.assertEqual(basis[row, pivot], 1)
                self.assertEqual(np.count_nonzero(basis[:, pivot]), 1)


    def test_chunks_cover_the_same_bases(self):
        """Small chunks enumerate the same bases in the same order."""
        whole = echelon_bases(3, 1, 5)
        chunked = np.concatenate([block.matrices(5) for block in echelon_blocks(3, 1, 5, 4)])
        np.testing.assert_array_equal(whole, chunked)
        self.assertTrue(all(block.size <= 4 for block in echelon_blocks(3, 1, 5, 4)))


    def test_zero_subspace(self):
        """r = 0 is a single empty basis."""
        blocks = echelon_blocks(3, 0, 5, 10)
        self.assertEqual(len(blocks), 1)
        self.assertEqual(blocks[0].matrices(5).shape, (1, 0, 3))


    def test_free_positions(self):
        self.assertEqual(free_positions(4, (0, 2)), ((0, 1), (0, 3), (1, 3)))
