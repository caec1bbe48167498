"""A module to detect distribution shift in input and explanation space.

Both datasets are explained by the same engine against the same baseline,
which is always derived from the source data.
"""
import logging

from xshift.explain.background_set import DEFAULT_BACKGROUND_CAP, BackgroundSet
from xshift.explain.explainer import ExplainConfig, explain
from xshift.explain.explanation_matrix import ExplanationMethod
from xshift.models.linear_model import LinearModel
from xshift.models.predictor import predict, squared_errors
from xshift.monitor.shift_report import ShiftReport
from xshift.stats.feature_comparison import distance, per_feature_compare
from xshift.stats.result import DistanceMethod
from xshift.stats.stability_index import DEFAULT_BINS
from xshift.util.errors import ConfigurationError
from xshift.util.matrix_operations import (as_matrix, as_vector, check_num_columns,
                                          column_means)
from xshift.util.random_sample import derive_seed

logger = logging.getLogger(__name__)


class DetectionConfig:

    """Settings of a shift check.

    Attributes:
        explain_config (ExplainConfig): Engine selection; a background or
            feature means are derived from the source data when missing.
        test (DistanceMethod): Two-sample comparison applied per column.
        alpha (float): Significance level for Distinct verdicts.
        bins (int): PSI bin count.
        background_cap (int): Maximum background rows drawn from the source.
        seed (int): Seed of the background subsample.
    """

    def __init__(self, explain_config=None, test=DistanceMethod.KS, alpha=0.05,
                 bins=DEFAULT_BINS, background_cap=DEFAULT_BACKGROUND_CAP, seed=0):
        self.explain_config = explain_config or ExplainConfig()
        self.test = DistanceMethod(test)
        self.alpha = float(alpha)
        self.bins = int(bins)
        self.background_cap = background_cap
        self.seed = seed
        if not 0.0 < self.alpha < 1.0:
            raise ConfigurationError('alpha must be in (0, 1), got %g' % self.alpha)

    def for_source(self, model, X_src):
        """Returns an ExplainConfig whose baseline comes from the source rows.

        A background is subsampled from X_src unless the configured engine
        already has the auxiliary data it needs.
        """
        base = self.explain_config
        linear = isinstance(model, LinearModel)
        if base.background is not None or base.engine == ExplanationMethod.GAUSSIAN_OBSERVATIONAL:
            return base
        if linear and base.engine is None and base.spec is not None:
            return base
        if linear and base.engine in (None, ExplanationMethod.LINEAR_INDEPENDENT) \
                and base.mu is not None:
            return base
        if linear and base.engine == ExplanationMethod.LINEAR_INDEPENDENT:
            return ExplainConfig(engine=base.engine, spec=base.spec, mu=column_means(X_src),
                                 n_jobs=base.n_jobs)
        background = BackgroundSet.from_data(X_src, cap=self.background_cap,
                                             seed=derive_seed(self.seed, 'background'))
        return ExplainConfig(engine=base.engine, spec=base.spec, background=background,
                             mu=base.mu, n_jobs=base.n_jobs)

    def to_dict(self):
        return {'test': self.test.value, 'alpha': self.alpha, 'bins': self.bins,
                'background_cap': self.background_cap, 'seed': self.seed}


def detect_shift(model, X_src, X_new, config=None, y_src=None, y_new=None):
    """Compares source and new data in input, explanation and prediction space.

    Args:
        model: Trained model.
        X_src (2-D array-like): Source rows.
        X_new (2-D array-like): New rows with the same features.
        config (DetectionConfig): Engine, test and significance level.
        y_src (array-like): Source targets; with y_new adds a loss comparison.
        y_new (array-like): New targets.

    Returns:
        A ShiftReport.
    """
    config = config or DetectionConfig()
    X_src = as_matrix(X_src, name='X_src')
    X_new = as_matrix(X_new, name='X_new')
    check_num_columns(X_new, X_src.shape[1], name='X_new')

    explain_config = config.for_source(model, X_src)
    explanation_src = explain(model, X_src, explain_config)
    explanation_new = explain(model, X_new, explain_config)

    input_results = per_feature_compare(X_src, X_new, config.test, config.alpha, config.bins)
    explanation_results = per_feature_compare(explanation_src.values, explanation_new.values,
                                              config.test, config.alpha, config.bins)
    prediction_result = distance(config.test, predict(model, X_src), predict(model, X_new),
                                 config.bins)
    loss_result = None
    if y_src is not None and y_new is not None:
        loss_result = distance(config.test, squared_errors(model, X_src, as_vector(y_src)),
                               squared_errors(model, X_new, as_vector(y_new)), config.bins)

    report = ShiftReport(input_results, explanation_results, prediction_result, config.alpha,
                         loss_result=loss_result,
                         metadata={'engine': explanation_src.method.value,
                                   'expected_value': explanation_src.expected_value,
                                   'model': model.to_dict() if hasattr(model, 'to_dict') else
                                   type(model).__name__,
                                   'explain': explain_config.to_dict(),
                                   'detection': config.to_dict(),
                                   'n_src': X_src.shape[0], 'n_new': X_new.shape[0]})
    logger.info('Distinct features: %d in input space, %d in explanation space',
                *report.counts)
    return report
