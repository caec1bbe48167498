"""Tests for multivariate_normal.py."""
import os
import unittest

import numpy as np

from xshift.synth.gaussian_spec import GaussianSpec
from xshift.synth.multivariate_normal import sample_mvn

TEST_DIRECTORY = os.path.dirname(__file__)


class TestMultivariateNormal(unittest.TestCase):

    def test_deterministic(self):
        spec = GaussianSpec.standard(2)
        first = sample_mvn(spec, 3, 42)
        self.assertEqual(first.shape, (3, 2))
        np.testing.assert_array_equal(first, sample_mvn(spec, 3, 42))
        self.assertFalse(np.array_equal(first, sample_mvn(spec, 3, 43)))

    def test_correlation(self):
        spec = GaussianSpec([0, 0], [[1, 0.2], [0.2, 1]])
        X = sample_mvn(spec, 50000, 7)
        centered = X - X.mean(axis=0)
        pearson = (centered[:, 0] @ centered[:, 1]) / np.sqrt(
            (centered[:, 0] @ centered[:, 0]) * (centered[:, 1] @ centered[:, 1]))
        self.assertGreaterEqual(pearson, 0.18)
        self.assertLessEqual(pearson, 0.22)

    def test_column_means(self):
        spec = GaussianSpec([1.0, -3.0, 0.5], np.diag([1.0, 4.0, 0.25]))
        n = 50000
        X = sample_mvn(spec, n, 9)
        bound = 6 * np.sqrt(np.diag(spec.covariance)) / np.sqrt(n)
        self.assertTrue(np.all(np.abs(X.mean(axis=0) - spec.mean) < bound))

    def test_rejects_empty(self):
        self.assertRaises(ValueError, sample_mvn, GaussianSpec.standard(2), 0, 1)

if __name__ == '__main__':
    res = unittest.main(verbosity=3, exit=False)
