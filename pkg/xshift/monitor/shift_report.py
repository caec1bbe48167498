"""A module to keep track of the outcome of an explanation-shift check."""
import dataclasses
from typing import List, Optional

from xshift.stats.feature_comparison import count_distinct
from xshift.stats.result import FeatureComparison, TestResult


@dataclasses.dataclass
class ShiftReport:

    """Input-space, explanation-space and prediction-space comparisons.

    Attributes:
        input_results (list (FeatureComparison)): X_src vs X_new per feature.
        explanation_results (list (FeatureComparison)): S(f, X_src) vs
            S(f, X_new) per feature.
        prediction_result (TestResult): f(X_src) vs f(X_new).
        alpha (float): Significance level of the verdicts.
        loss_result (TestResult): Per-row squared errors on the two datasets,
            present when both target vectors were given.
        metadata (dict): Engine, model parameters, seeds and sample sizes.
    """

    input_results: List[FeatureComparison]
    explanation_results: List[FeatureComparison]
    prediction_result: TestResult
    alpha: float
    loss_result: Optional[TestResult] = None
    metadata: dict = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        assert len(self.input_results) == len(self.explanation_results), \
            'Input and explanation comparisons must cover the same features'

    @property
    def counts(self):
        """Returns (distinct_input, distinct_explanation)."""
        return count_distinct(self.input_results), count_distinct(self.explanation_results)

    @property
    def prediction_distinct(self):
        return _is_distinct(self.prediction_result, self.alpha)

    @property
    def loss_distinct(self):
        return _is_distinct(self.loss_result, self.alpha)


def _is_distinct(result, alpha):
    if result is None or result.p_value is None:
        return None
    return bool(result.p_value < alpha)
