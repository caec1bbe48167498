"""Tests for kolmogorov_smirnov.py."""
import os
import unittest

import numpy as np
from scipy import stats

from xshift.stats.kolmogorov_smirnov import ks_p_value, ks_statistic, ks_two_sample
from xshift.stats.result import DistanceMethod
from xshift.util.errors import EmptyInputError
from xshift.util.random_sample import derive_seed, sample_standard_normal

TEST_DIRECTORY = os.path.dirname(__file__)


class TestKolmogorovSmirnov(unittest.TestCase):

    def test_identical_samples(self):
        a = np.random.default_rng(0).normal(size=500)
        result = ks_two_sample(a, a)
        self.assertEqual(result.statistic, 0.0)
        self.assertEqual(result.p_value, 1.0)
        self.assertEqual(result.method, DistanceMethod.KS)

    def test_statistic_matches_scipy(self):
        rng = np.random.default_rng(1)
        for n_a, n_b in [(10, 10), (50, 80), (1000, 333)]:
            a = rng.normal(size=n_a)
            b = rng.normal(loc=0.3, size=n_b)
            self.assertAlmostEqual(ks_two_sample(a, b).statistic,
                                   stats.ks_2samp(a, b).statistic, delta=1e-12)

    def test_ties(self):
        a = np.array([0.0, 0.0, 1.0, 1.0])
        b = np.array([0.0, 1.0, 1.0, 1.0])
        self.assertEqual(ks_statistic(np.sort(a), np.sort(b)), 0.25)
        self.assertEqual(ks_two_sample([1.0, 2.0], [3.0, 4.0]).statistic, 1.0)

    def test_symmetric(self):
        rng = np.random.default_rng(2)
        a = rng.normal(size=300)
        b = rng.normal(scale=2.0, size=200)
        forward = ks_two_sample(a, b)
        backward = ks_two_sample(b, a)
        self.assertEqual(forward.statistic, backward.statistic)
        self.assertEqual(forward.p_value, backward.p_value)

    def test_p_value_range(self):
        self.assertEqual(ks_p_value(0.0, 100, 100), 1.0)
        self.assertLess(ks_p_value(1.0, 100, 100), 1e-20)
        previous = 1.0
        for d in np.linspace(0.0, 0.5, 11):
            current = ks_p_value(d, 200, 300)
            self.assertLessEqual(current, previous)
            previous = current

    def test_invariant_under_increasing_maps(self):
        rng = np.random.default_rng(3)
        a = rng.normal(size=400)
        b = rng.normal(loc=0.2, scale=1.3, size=250)
        expected = ks_two_sample(a, b)
        for transform in (np.exp, lambda x: 3.0 * x - 7.0, lambda x: 0.5 * x + 100.0):
            mapped = ks_two_sample(transform(a), transform(b))
            self.assertEqual(mapped.statistic, expected.statistic)
            self.assertEqual(mapped.p_value, expected.p_value)

    def test_p_value_decreases_with_statistic(self):
        for n_a, n_b in [(30, 30), (200, 300), (5000, 5000)]:
            p_values = [ks_p_value(d, n_a, n_b) for d in np.linspace(0.0, 1.0, 101)]
            for before, after in zip(p_values, p_values[1:]):
                self.assertLessEqual(after, before)
            self.assertEqual(p_values[0], 1.0)
            self.assertLess(p_values[-1], 1e-10)

    def test_detects_mean_shift(self):
        a = sample_standard_normal(derive_seed(5, 'a'), 5000)
        b = sample_standard_normal(derive_seed(5, 'b'), 5000) + 0.2
        self.assertLess(ks_two_sample(a, b).p_value, 1e-6)

    def test_null_calibration(self):
        rejections = 0
        for pair in range(20):
            a = sample_standard_normal(derive_seed(7, 'a/%d' % pair), 5000)
            b = sample_standard_normal(derive_seed(7, 'b/%d' % pair), 5000)
            if ks_two_sample(a, b).p_value < 0.01:
                rejections += 1
        self.assertLessEqual(rejections, 2)

    def test_small_samples(self):
        self.assertRaises(EmptyInputError, ks_two_sample, [1.0], [1.0, 2.0])
        self.assertRaises(EmptyInputError, ks_two_sample, [1.0, np.nan], [1.0, 2.0])

if __name__ == '__main__':
    res = unittest.main(verbosity=3, exit=False)
