"""End-to-end checks of the synthetic experiments at full scale (n = 50000)."""
import os
import unittest

import numpy as np

from xshift.cli.experiment_config import ExperimentConfig
from xshift.cli.report import DISTINCT, NOT_DISTINCT
from xshift.cli.runner import run_quantify, run_unused
from xshift.explain.explainer import ExplainConfig, explain
from xshift.models.linear_model import LinearModel
from xshift.models.predictor import fit_model
from xshift.monitor.posterior_experiment import posterior_shift_experiment
from xshift.monitor.shift_detector import DetectionConfig, detect_shift
from xshift.stats.kolmogorov_smirnov import ks_two_sample
from xshift.synth.synthetic_task import make_task_data, make_test_data, standard_tasks
from xshift.util.random_sample import derive_seed, sample_standard_normal

TEST_DIRECTORY = os.path.dirname(__file__)
NUM_ROWS = 50000
# Under equal distributions at n = 50000 per side, P(D >= 0.02) is below 1e-8.
SAME_DISTRIBUTION_STATISTIC = 0.02


class TestFullScaleExperiments(unittest.TestCase):

    def test_multivariate_shift(self):
        task = standard_tasks(n=NUM_ROWS, seed=0)['multivariate']
        X_train, y_train, X_ood, _ = make_task_data(task)
        X_test, _ = make_test_data(task)
        model = fit_model('gbdt', X_train, y_train)
        report = detect_shift(model, X_test, X_ood, DetectionConfig(seed=0))
        for comparison in report.input_results:
            self.assertLess(comparison.result.statistic, SAME_DISTRIBUTION_STATISTIC)
        for comparison in report.explanation_results:
            self.assertLess(comparison.result.p_value, 1e-10)

    def test_posterior_shift(self):
        for seed in range(5):
            task = standard_tasks(n=NUM_ROWS, seed=seed)['posterior']
            comparisons, _ = posterior_shift_experiment(task, DetectionConfig(seed=seed))
            for result in comparisons[0].results + comparisons[1].results:
                self.assertLess(result.statistic, SAME_DISTRIBUTION_STATISTIC)
            self.assertTrue(any(result.p_value < 0.01 for result in comparisons[3].results))

    def test_linear_posterior_predictions(self):
        task = standard_tasks(n=NUM_ROWS, seed=1)['posterior-linear']
        comparisons, _ = posterior_shift_experiment(task, model_family='linear')
        self.assertLess(comparisons[2].results[0].statistic, SAME_DISTRIBUTION_STATISTIC)
        self.assertTrue(comparisons[3].distinct)

    def test_unused_feature(self):
        task = standard_tasks(n=NUM_ROWS, seed=0)['unused-linear']
        X_train, y_train, X_ood, y_ood = make_task_data(task)
        X_test, y_test = make_test_data(task)
        fitted = fit_model('linear', X_train, y_train)
        model = LinearModel(fitted.intercept, [fitted.coefficients[0], fitted.coefficients[1],
                                               0.0])
        config = DetectionConfig(ExplainConfig(spec=task.source_spec))
        report = detect_shift(model, X_test, X_ood, config, y_src=y_test, y_new=y_ood)
        self.assertLess(report.input_results[2].result.p_value, 1e-10)
        self.assertEqual(report.loss_result.statistic, 0.0)
        self.assertGreater(report.explanation_results[2].result.p_value, 0.05)

        self.assertEqual(report.metadata['engine'], 'GaussianObservational')

    def test_unused_feature_fitted_booster(self):
        for seed in range(3):
            rows, metadata = run_unused(ExperimentConfig('unused', n=NUM_ROWS, seed=seed))
            self.assertEqual(metadata['used_features'], [0, 1])
            self.assertEqual(rows[0].verdict, DISTINCT)
            self.assertEqual(rows[1].verdict, NOT_DISTINCT)
            self.assertEqual(rows[2].statistic, 0.0)
            self.assertGreater(rows[2].p_value, 0.05)

    def test_unused_feature_column_is_zero(self):
        task = standard_tasks(n=NUM_ROWS, seed=0)['unused-linear']
        X_test, _ = make_test_data(task)
        model = LinearModel(0.3, [1.0, 1.0, 0.0])
        values = explain(model, X_test, ExplainConfig(spec=task.source_spec)).values
        self.assertLess(np.max(np.abs(values[:, 2])), 1e-12)

    def test_null_calibration(self):
        rejections = 0
        for pair in range(20):
            a = sample_standard_normal(derive_seed(11, 'null-a/%d' % pair), NUM_ROWS)
            b = sample_standard_normal(derive_seed(11, 'null-b/%d' % pair), NUM_ROWS)
            if ks_two_sample(a, b).p_value < 0.01:
                rejections += 1
        self.assertLessEqual(rejections, 1)

    def test_quantification_ordering(self):
        for seed in range(5):
            config = ExperimentConfig('quantify', n=NUM_ROWS, seed=seed, B=200, m=500,
                                      distance='wasserstein', input_mode='all')
            rows, metadata = run_quantify(config)
            mae = {row.comparison: row.statistic for row in rows}
            dummy = mae['Dummy Mean Regressor']
            explanation = mae['ExplanationShift / Wasserstein1']
            self.assertLess(explanation, mae['DistributionShift / Wasserstein1'] - 0.1 * dummy)
            self.assertLess(explanation, 0.9 * dummy)
            self.assertEqual(metadata['explain']['background']['rows'], 2000)

if __name__ == '__main__':
    res = unittest.main(verbosity=3, exit=False)
