from itertools import product
from math import factorial

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from core.exceptions import ArityError, DegenerateCodeError, InfeasibleSweepError
from fields.arithmetic import FieldSpec
from sympoly.polynomials import SymPoly
from sympoly.zeroes import *



class CountingHelperTests(SimpleTestCase):

    def test_perm_count(self):
        """P(5, 2) = 20, P(3, 5) = 0, P(n, 0) = 1 and negative arguments give 0."""
        self.assertEqual(perm_count(5, 2), 20)
        self.assertEqual(perm_count(3, 5), 0)
        self.assertEqual(perm_count(7, 0), 1)
        self.assertEqual(perm_count(4, -1), 0)
        self.assertEqual(perm_count(-1, 0), 0)


    def test_bounds_for_q5_m2(self):
        """Over F_5 with m = 2 the general bound is 8 and the sharper bound 5."""
        self.assertEqual(zero_count_bound(5, 2, type_one=True), 8)
        self.assertEqual(zero_count_bound(5, 2, type_one=False), 5)


    def test_bounds_coincide_when_set_has_m_elements(self):
        """|S| = m makes the correction term vanish."""
        for m in range(1, 5):
            self.assertEqual(zero_count_bound(m, m, True), zero_count_bound(m, m, False))


    def test_distinguished_tuples_order(self):
        """Tuples over {0, 1, 2} come out in lexicographic order."""
        rows = distinguished_tuples(range(3), 2).tolist()
        self.assertEqual(rows, [[0, 1], [0, 2], [1, 0], [1, 2], [2, 0], [2, 1]])
        self.assertEqual(distinguished_tuples(range(2), 3).shape, (0, 3))



class BruteForceCountTests(SimpleTestCase):

    def setUp(self):
        self.f5 = FieldSpec(5)


    def count(self, coeffs, subset=None, spec=None):
        return count_distinguished_zeroes(SymPoly.from_indices(spec or self.f5, coeffs), subset)


    def test_counts_over_f5(self):
        """x_1 x_2 has 8 zeroes, 3 + x_1 x_2 has 4 and 4 + x_1 x_2 has 2."""
        self.assertEqual(self.count((0, 0, 1)), 8)
        self.assertEqual(self.count((3, 0, 1)), 4)
        self.assertEqual(self.count((4, 0, 1)), 2)


    def test_enumerated_zeroes(self):
        """The zeroes of 4 + x_1 x_2 are (2, 3) and (3, 2)."""
        f = SymPoly.from_indices(self.f5, (4, 0, 1))
        zeroes = [point.indices for point in enumerate_distinguished_zeroes(f)]
        self.assertEqual(zeroes, [(2, 3), (3, 2)])
        self.assertTrue(all(point.is_distinguished for point in enumerate_distinguished_zeroes(f)))


    def test_subset_with_and_without_root(self):
        """x_1 x_2 attains the general bound on S containing 0 and has no zeroes otherwise."""
        self.assertEqual(self.count((0, 0, 1), subset=(0, 1, 2)), zero_count_bound(3, 2))
        self.assertEqual(self.count((0, 0, 1), subset=(1, 2, 3)), 0)


    def test_subset_too_small(self):
        """|S| < m is rejected."""
        with self.assertRaises(ValidationError):
            self.count((0, 0, 0, 1), subset=(0, 1))


    def test_parallel_count_matches(self):
        """Splitting the tuples over workers does not change the count."""
        f = SymPoly.from_indices(FieldSpec(7), (2, 5, 0, 1))
        with self.settings(SYMCODE={'JOBS': 1, 'MAX_Q': 9, 'MAX_M': 4, 'MAX_SWEEP': 10**9, 'CHUNK_SIZE': 16}):
            self.assertEqual(count_distinguished_zeroes(f, jobs=2), count_distinguished_zeroes(f, jobs=1))



class ClosedFormTests(SimpleTestCase):

    def test_examples(self):
        """q=5: 3 + x_1 x_2 has 4; q=4: 1 + sigma^1 has 4 and the zero polynomial 12."""
        f5, f4 = FieldSpec(5), FieldSpec.from_order(4)
        self.assertEqual(closed_form_count_m2(SymPoly.from_indices(f5, (3, 0, 1))), 4)
        self.assertEqual(closed_form_count_m2(SymPoly.from_indices(f4, (1, 1, 0))), 4)
        self.assertEqual(closed_form_count_m2(SymPoly.from_indices(f4, (0, 0, 0))), 12)


    def test_matches_brute_force(self):
        """The closed form agrees with brute force on every polynomial for q = 3, 4, 5, 8, 9."""
        for q in (3, 4, 5, 8, 9):
            spec = FieldSpec.from_order(q)
            for coeffs in product(range(q), repeat=3):
                f = SymPoly.from_indices(spec, coeffs)
                with self.subTest(q=q, coeffs=coeffs):
                    self.assertEqual(closed_form_count_m2(f), count_distinguished_zeroes(f))


    def test_rejects_q2_and_other_arity(self):
        """q = 2 and m != 2 are outside the closed form."""
        with self.assertRaises(DegenerateCodeError):
            closed_form_count_m2(SymPoly.from_indices(FieldSpec(2), (1, 0, 1)))
        with self.assertRaises(ArityError):
            closed_form_count_m2(SymPoly.from_indices(FieldSpec(5), (1, 0, 1, 1)))



class HistogramTests(SimpleTestCase):

    def test_table_rows(self):
        """Rows of the m = 2 tables at q = 5, 4 and the merged q = 3 case."""
        self.assertEqual(table_rows_m2(5), {0: 4, 2: 40, 4: 60, 8: 20, 20: 1})
        self.assertEqual(table_rows_m2(4), {0: 6, 2: 36, 4: 9, 6: 12, 12: 1})
        self.assertEqual(table_rows_m2(3), {0: 8, 2: 12, 4: 6, 6: 1})


    def test_table_rows_total(self):
        """Every table accounts for all q^3 polynomials."""
        for q in (3, 4, 5, 7, 8, 9, 11, 16):
            self.assertEqual(sum(table_rows_m2(q).values()), q ** 3)


    def test_brute_force_histogram_matches_tables(self):
        """Brute-force histograms reproduce the tables, extension fields included."""
        for q in (3, 4, 5, 7, 8, 9):
            spec = FieldSpec.from_order(q)
            with self.subTest(q=q):
                self.assertEqual(empirical_zero_histogram(spec, 2), table_rows_m2(q))
                self.assertEqual(closed_form_histogram_m2(spec), table_rows_m2(q))


    def test_counts_divisible_by_m_factorial(self):
        """Every zero count for m = 3 is a multiple of 3!."""
        histogram = empirical_zero_histogram(FieldSpec(5), 3)
        self.assertEqual(sum(histogram.values()), 5 ** 4)
        self.assertTrue(all(count % factorial(3) == 0 for count in histogram))


    def test_histogram_independent_of_jobs(self):
        """The histogram does not depend on the number of workers."""
        spec = FieldSpec(5)
        with self.settings(SYMCODE={'JOBS': 1, 'MAX_Q': 9, 'MAX_M': 4, 'MAX_SWEEP': 10**9, 'CHUNK_SIZE': 50}):
            self.assertEqual(empirical_zero_histogram(spec, 3, jobs=3), empirical_zero_histogram(spec, 3, jobs=1))


    def test_infeasible_histogram_aborts(self):
        """A histogram above MAX_SWEEP aborts unless forced."""
        with self.settings(SYMCODE={'JOBS': 1, 'MAX_Q': 9, 'MAX_M': 4, 'MAX_SWEEP': 100, 'CHUNK_SIZE': 4096}):
            with self.assertRaises(InfeasibleSweepError):
                empirical_zero_histogram(FieldSpec(5), 2)
            self.assertEqual(empirical_zero_histogram(FieldSpec(5), 2, force=True), table_rows_m2(5))
