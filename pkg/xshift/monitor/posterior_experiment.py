"""A module for the posterior-shift comparison.

Two models are trained on the same input distribution with different
target relations. Inputs, targets and predictions stay equally
distributed while the explanations of the two models differ.
"""
import dataclasses
import logging
from typing import List, Optional

from xshift.explain.explainer import explain
from xshift.models.predictor import fit_model, predict
from xshift.monitor.shift_detector import DetectionConfig
from xshift.stats.feature_comparison import distance, per_feature_compare
from xshift.stats.result import TestResult
from xshift.synth.synthetic_task import TaskName, make_task_data
from xshift.util.errors import ConfigurationError

logger = logging.getLogger(__name__)


@dataclasses.dataclass
class Comparison:

    """One row of a comparison table.

    Attributes:
        name (str): What was compared.
        results (list (TestResult)): One result per feature, or a single result.
        distinct (bool): Whether any result is significant, None for distances.
    """

    name: str
    results: List[TestResult]
    distinct: Optional[bool] = None


def _comparison(name, results, alpha):
    if any(result.p_value is None for result in results):
        return Comparison(name, results, None)
    return Comparison(name, results, any(result.p_value < alpha for result in results))


def posterior_shift_experiment(task, config=None, model_family='gbdt', gbdt_params=None):
    """Runs the four posterior-shift comparisons on a task.

    f is trained on (X, Y) and h on (X_ood, Y_ood). The comparisons are
    P(X) vs P(X_ood), P(Y) vs P(Y_ood), P(f(X)) vs P(h(X)) and
    S(f, X) vs S(h, X), with both explanations measured against the same
    baseline built from X.

    Args:
        task (SyntheticTask): A posterior-shift task.
        config (DetectionConfig): Engine, test and significance level.
        model_family (str): 'gbdt' or 'linear'.
        gbdt_params (GbdtParameters): Boosting parameters for 'gbdt'.

    Returns:
        A tuple (comparisons, metadata) with the four Comparison rows.

    Raises:
        ConfigurationError: If the task is not a posterior-shift task.
    """
    if task.name != TaskName.POSTERIOR_SHIFT:
        raise ConfigurationError('Posterior experiment needs a PosteriorShift task, got %s'
                                 % task.name.value)
    config = config or DetectionConfig(seed=task.seed)
    X, y, X_ood, y_ood = make_task_data(task)
    model_f = fit_model(model_family, X, y, gbdt_params)
    model_h = fit_model(model_family, X_ood, y_ood, gbdt_params)

    explain_config = config.for_source(model_f, X)
    explanation_f = explain(model_f, X, explain_config)
    explanation_h = explain(model_h, X, explain_config)

    alpha = config.alpha
    inputs = [c.result for c in per_feature_compare(X, X_ood, config.test, alpha, config.bins)]
    shap = [c.result for c in per_feature_compare(explanation_f.values, explanation_h.values,
                                                  config.test, alpha, config.bins)]
    comparisons = [
        _comparison('P(X), P(X_ood)', inputs, alpha),
        _comparison('P(Y), P(Y_ood)', [distance(config.test, y, y_ood, config.bins)], alpha),
        _comparison('P(f(X)), P(h(X))',
                    [distance(config.test, predict(model_f, X), predict(model_h, X),
                              config.bins)], alpha),
        _comparison('S(f,X), S(h,X)', shap, alpha),
    ]
    metadata = {'engine': explanation_f.method.value, 'model_family': model_family,
                'model_f': model_f.to_dict(), 'model_h': model_h.to_dict(),
                'explain': explain_config.to_dict(), 'detection': config.to_dict(),
                'task': task.to_dict()}
    logger.info('Posterior shift: explanations %s',
                'Distinct' if comparisons[-1].distinct else 'Not Distinct')
    return comparisons, metadata
