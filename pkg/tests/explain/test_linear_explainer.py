"""Tests for linear_explainer.py."""
import os
import unittest

import numpy as np

from tests.helper import check_matrix_approx_eq
from xshift.explain.explanation_matrix import ExplanationMethod, reconstruct_predictions
from xshift.explain.linear_explainer import shap_linear_independent
from xshift.models.linear_model import LinearModel, fit_ols
from xshift.synth.synthetic_task import make_task_data, standard_tasks
from xshift.util.errors import DimensionMismatchError

TEST_DIRECTORY = os.path.dirname(__file__)


class TestLinearExplainer(unittest.TestCase):

    def setUp(self):
        self.model = LinearModel(0.0, [2.0, 1.0])

    def test_zero_at_mean(self):
        explanation = shap_linear_independent(self.model, [[0.3, -0.7]], [0.3, -0.7])
        np.testing.assert_array_equal(explanation.values, [[0.0, 0.0]])

    def test_closed_form(self):
        explanation = shap_linear_independent(self.model, [[1.0, 1.0]], [0.0, 0.0])
        np.testing.assert_array_equal(explanation.values, [[2.0, 1.0]])
        self.assertEqual(explanation.expected_value, 0.0)
        self.assertEqual(explanation.method, ExplanationMethod.LINEAR_INDEPENDENT)
        self.assertEqual(explanation.values.sum(), 3.0)

    def test_efficiency(self):
        model = LinearModel(1.5, [0.5, -2.0, 3.0])
        X = np.random.default_rng(0).normal(size=(100, 3))
        explanation = shap_linear_independent(model, X, X.mean(axis=0))
        check_matrix_approx_eq(reconstruct_predictions(explanation), model.predict(X), error=1e-12)
        self.assertLess(explanation.efficiency_gap(model.predict(X)), 1e-12)

    def test_dimension_mismatch(self):
        self.assertRaises(DimensionMismatchError, shap_linear_independent, self.model,
                          [[1.0, 1.0]], [0.0, 0.0, 0.0])
        self.assertRaises(DimensionMismatchError, shap_linear_independent, self.model,
                          [[1.0, 1.0, 1.0]], [0.0, 0.0])

    def test_swapped_coefficients_swap_spread(self):
        task = standard_tasks(n=50000, seed=4)['posterior-linear']
        X, y, X_ood, y_ood = make_task_data(task)
        f = fit_ols(X, y)
        g = fit_ols(X_ood, y_ood)
        mu = X.mean(axis=0)
        spread_f = shap_linear_independent(f, X, mu).values.std(axis=0)
        spread_g = shap_linear_independent(g, X, mu).values.std(axis=0)
        check_matrix_approx_eq(spread_f, [2.0, 1.0], error=0.05)
        check_matrix_approx_eq(spread_g, [1.0, 2.0], error=0.05)

if __name__ == '__main__':
    res = unittest.main(verbosity=3, exit=False)
