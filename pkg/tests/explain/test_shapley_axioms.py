"""Randomized checks of the Shapley axioms across engines."""
import os
import unittest

import numpy as np

from tests.helper import check_matrix_approx_eq
from xshift.explain.background_set import BackgroundSet
from xshift.explain.gaussian_explainer import shap_gaussian_observational
from xshift.explain.interventional_explainer import shap_interventional
from xshift.explain.linear_explainer import shap_linear_independent
from xshift.models.gbdt_model import GbdtParameters, fit_gbdt
from xshift.models.linear_model import LinearModel
from xshift.synth.gaussian_spec import GaussianSpec

TEST_DIRECTORY = os.path.dirname(__file__)
NUM_CASES = 200


def random_case(rng):
    p = int(rng.integers(2, 5))
    background = rng.normal(size=(int(rng.integers(5, 30)), p))
    points = rng.normal(scale=1.5, size=(3, p))
    return p, background, points


class TestShapleyAxioms(unittest.TestCase):

    def test_efficiency_and_dummy_for_trees(self):
        rng = np.random.default_rng(10)
        for _ in range(NUM_CASES):
            p, background, points = random_case(rng)
            dummy = int(rng.integers(p))
            X = rng.normal(size=(60, p))
            used = [j for j in range(p) if j != dummy]
            y = X[:, used[0]] * X[:, used[-1]] + X[:, used[0]]
            train = X.copy()
            train[:, dummy] = 0.0
            params = GbdtParameters(rounds=3, max_depth=2, min_samples_leaf=5, split_penalty=0.0)
            model = fit_gbdt(train, y, params)
            self.assertNotIn(dummy, model.used_features())
            explanation = shap_interventional(model, points, BackgroundSet(background))
            self.assertLess(explanation.efficiency_gap(model.predict(points)), 1e-6)
            np.testing.assert_array_equal(explanation.column(dummy), np.zeros(3))

    def test_symmetry(self):
        rng = np.random.default_rng(11)
        for _ in range(NUM_CASES):
            p, background, points = random_case(rng)
            i, j = rng.choice(p, size=2, replace=False)
            coefficients = rng.normal(size=p)
            coefficients[j] = coefficients[i]
            model = LinearModel(rng.normal(), coefficients)
            swapped = background.copy()
            swapped[:, [i, j]] = swapped[:, [j, i]]
            points[:, j] = points[:, i]
            values = shap_interventional(model, points,
                                         BackgroundSet(np.vstack([background, swapped]))).values
            check_matrix_approx_eq(values[:, i], values[:, j], error=1e-10)

    def test_linearity(self):
        rng = np.random.default_rng(12)
        for _ in range(NUM_CASES):
            p, background, points = random_case(rng)
            first = LinearModel(rng.normal(), rng.normal(size=p))
            second = LinearModel(rng.normal(), rng.normal(size=p))
            shared = BackgroundSet(background)
            combined = shap_interventional(first + second, points, shared).values
            separate = (shap_interventional(first, points, shared).values
                        + shap_interventional(second, points, shared).values)
            check_matrix_approx_eq(combined, separate, error=1e-8)

    def test_engines_agree_without_correlation(self):
        rng = np.random.default_rng(13)
        for _ in range(NUM_CASES):
            p, background, points = random_case(rng)
            model = LinearModel(rng.normal(), rng.normal(size=p))
            shared = BackgroundSet(background)
            spec = GaussianSpec(shared.means, np.diag(rng.uniform(0.5, 2.0, size=p)))
            independent = shap_linear_independent(model, points, shared.means).values
            observational = shap_gaussian_observational(model, points, spec).values
            interventional = shap_interventional(model, points, shared).values
            check_matrix_approx_eq(observational, independent, error=1e-8)
            check_matrix_approx_eq(interventional, independent, error=1e-8)

if __name__ == '__main__':
    res = unittest.main(verbosity=3, exit=False)
