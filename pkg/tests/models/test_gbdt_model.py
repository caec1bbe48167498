"""Tests for gbdt_model.py."""
import os
import unittest

import numpy as np

from xshift.models.gbdt_model import GbdtModel, GbdtParameters, fit_gbdt
from xshift.synth.synthetic_task import make_task_data, standard_tasks
from xshift.util.errors import ConfigurationError, DimensionMismatchError, EmptyInputError

TEST_DIRECTORY = os.path.dirname(__file__)


def walk(node, x):
    while not node.is_leaf:
        node = node.left if x[node.feature_index] <= node.threshold else node.right
    return node.leaf_value


def check_cover(test_case, node):
    if node.is_leaf:
        return
    test_case.assertEqual(node.cover, node.left.cover + node.right.cover)
    check_cover(test_case, node.left)
    check_cover(test_case, node.right)


class TestGbdtModel(unittest.TestCase):

    def setUp(self):
        task = standard_tasks(n=5000, seed=11)['multivariate']
        self.X, self.y, _, _ = make_task_data(task)
        self.model = fit_gbdt(self.X, self.y, GbdtParameters(rounds=30))

    def test_parameters_validation(self):
        self.assertRaises(ConfigurationError, GbdtParameters, rounds=-1)
        self.assertRaises(ConfigurationError, GbdtParameters, max_depth=0)
        self.assertRaises(ConfigurationError, GbdtParameters, learning_rate=0.0)
        self.assertRaises(ConfigurationError, GbdtParameters, learning_rate=1.5)
        self.assertRaises(ConfigurationError, GbdtParameters, min_samples_leaf=0)
        self.assertRaises(ConfigurationError, GbdtParameters, split_penalty=-1.0)

    def test_tree_count_and_depth(self):
        self.assertEqual(len(self.model.trees), 30)
        self.assertTrue(all(tree.depth() <= 3 for tree in self.model.trees))

    def test_cover_conservation(self):
        for tree in self.model.trees:
            self.assertEqual(tree.cover, 5000)
            check_cover(self, tree)

    def test_training_loss_non_increasing(self):
        losses = self.model.training_loss
        self.assertEqual(len(losses), 31)
        for before, after in zip(losses, losses[1:]):
            self.assertLessEqual(after, before + 1e-12)
        residual = self.y - self.model.predict(self.X)
        self.assertAlmostEqual(losses[-1], np.mean(residual ** 2), delta=1e-12)

    def test_predict_matches_tree_walk(self):
        predictions = self.model.predict(self.X[:300])
        for i in range(300):
            expected = self.model.base_score + self.model.learning_rate * sum(
                walk(tree, self.X[i]) for tree in self.model.trees)
            self.assertAlmostEqual(predictions[i], expected, delta=1e-12)

    def test_learns_product(self):
        model = fit_gbdt(self.X, self.y)
        self.assertLess(model.training_loss[-1], 0.1)

    def test_constant_target(self):
        model = fit_gbdt(self.X, np.full(5000, 3.0), GbdtParameters(rounds=5))
        self.assertEqual(model.base_score, 3.0)
        for tree in model.trees:
            self.assertTrue(tree.is_leaf)
            self.assertEqual(tree.leaf_value, 0.0)
        np.testing.assert_array_equal(model.predict(self.X[:10]), np.full(10, 3.0))

    def test_step_function(self):
        x = np.random.default_rng(5).normal(size=(1000, 1))
        y = (x[:, 0] > 0).astype(float)
        model = fit_gbdt(x, y, GbdtParameters(rounds=50, max_depth=1))
        self.assertLess(np.mean((model.predict(x) - y) ** 2), 0.01)
        thresholds = {tree.threshold for tree in model.trees}
        self.assertEqual(len(thresholds), 1)
        self.assertLess(abs(thresholds.pop()), 0.05)

    def test_zero_rounds(self):
        model = fit_gbdt(self.X, self.y, GbdtParameters(rounds=0))
        np.testing.assert_array_equal(model.predict(self.X[:5]), np.full(5, self.y.mean()))
        self.assertEqual(model.used_features(), [])

    def test_split_tie_prefers_lowest_feature(self):
        X = np.column_stack([np.repeat([0.0, 1.0], 50), np.repeat([0.0, 1.0], 50)])
        y = X[:, 0]
        model = fit_gbdt(X, y, GbdtParameters(rounds=1, max_depth=1, min_samples_leaf=10))
        self.assertEqual(model.trees[0].feature_index, 0)
        self.assertEqual(model.trees[0].threshold, 0.5)

    def test_errors(self):
        self.assertRaises(ConfigurationError, fit_gbdt, self.X[:30], self.y[:30])
        self.assertRaises(EmptyInputError, fit_gbdt, np.empty((0, 2)), [])
        self.assertRaises(DimensionMismatchError, self.model.predict, np.zeros((2, 3)))

    def test_leaf_boxes_reproduce_predictions(self):
        lower, upper, values = self.model.leaf_boxes()
        inside = np.all((lower[np.newaxis] < self.X[:200, np.newaxis]) &
                        (self.X[:200, np.newaxis] <= upper[np.newaxis]), axis=2)
        np.testing.assert_allclose(self.model.base_score + inside @ values,
                                   self.model.predict(self.X[:200]), atol=1e-12)
        self.assertEqual(int(inside.sum()), 200 * len(self.model.trees))

    def test_noise_feature_never_split(self):
        rng = np.random.default_rng(21)
        X = rng.normal(size=(20000, 3))
        y = X[:, 0] * X[:, 1] + 0.1 * rng.normal(size=20000)
        model = fit_gbdt(X, y)
        self.assertEqual(model.used_features(), [0, 1])
        self.assertLess(model.training_loss[-1], 0.1)

    def test_linear_target_ignores_noise_feature(self):
        task = standard_tasks(n=20000, seed=4)['unused-linear']
        X, y, _, _ = make_task_data(task)
        model = fit_gbdt(X, y)
        self.assertEqual(model.used_features(), [0, 1])

    def test_zero_penalty_splits_on_noise(self):
        rng = np.random.default_rng(22)
        X = rng.normal(size=(2000, 2))
        y = rng.normal(size=2000)
        params = GbdtParameters(rounds=5, max_depth=2, split_penalty=0.0)
        self.assertEqual(fit_gbdt(X, y, params).used_features(), [0, 1])
        for tree in fit_gbdt(X, y, GbdtParameters(rounds=5, max_depth=2)).trees:
            self.assertTrue(tree.is_leaf)

    def test_parameters_report_penalty(self):
        self.assertEqual(GbdtParameters().to_dict()['split_penalty'], 4.0)
        self.assertEqual(self.model.to_dict()['params']['split_penalty'], 4.0)

    def test_empty_model_boxes(self):
        model = GbdtModel(1.0, [], 0.1, 2)
        lower, upper, values = model.leaf_boxes()
        self.assertEqual(lower.shape, (0, 2))
        self.assertEqual(values.size, 0)

if __name__ == '__main__':
    res = unittest.main(verbosity=3, exit=False)
