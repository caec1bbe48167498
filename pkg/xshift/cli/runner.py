"""A module to run the synthetic experiments and collect their reports."""
import logging
import time

import numpy as np

import xshift
from xshift.cli.experiment_config import ALL, Experiment
from xshift.cli.report import Report, ResultRow, verdict
from xshift.explain.explainer import ENGINE_NAMES, ExplainConfig, explain
from xshift.explain.explanation_matrix import ExplanationMethod
from xshift.models.predictor import fit_model, predict
from xshift.monitor.degradation import (INPUT_MODE_NAMES, InputMode, QuantificationConfig,
                                        quantify_degradation)
from xshift.monitor.fairness import fairness_metrics
from xshift.monitor.posterior_experiment import posterior_shift_experiment
from xshift.monitor.shift_detector import DetectionConfig, detect_shift
from xshift.stats.feature_comparison import per_feature_compare
from xshift.stats.result import DISTANCE_NAMES, DistanceMethod
from xshift.synth.synthetic_task import (UNUSED_FEATURE_INDEX, make_task_data, make_test_data,
                                         standard_tasks, train_test_split)
from xshift.util.random_sample import derive_seed

logger = logging.getLogger(__name__)

REFERENCE_GROUP = 'x1>=0'
PROTECTED_GROUP = 'x1<0'


def _task(config, key):
    return standard_tasks(n=config.n, seed=config.seed)[key]


def _detection_config(config, task):
    engine = None if config.engine is None else ENGINE_NAMES[config.engine]
    spec = task.source_spec if engine == ExplanationMethod.GAUSSIAN_OBSERVATIONAL else None
    return DetectionConfig(ExplainConfig(engine=engine, spec=spec, n_jobs=config.n_jobs),
                           alpha=config.alpha, seed=config.seed)


def _row(comparison, result, alpha):
    p_value = None if result.p_value is None else float(result.p_value)
    return ResultRow(comparison, result.method.value, float(result.statistic), p_value,
                     verdict(p_value, alpha))


def _feature_name(j):
    return 'X_%d' % (j + 1)


def _count_distinct(results, alpha):
    return sum(1 for result in results if result.p_value < alpha)


def run_multivariate(config):
    """Compares held-out source data with correlated data in input and explanation space."""
    task = _task(config, 'multivariate')
    X_train, y_train, X_ood, _ = make_task_data(task)
    X_test, _ = make_test_data(task)
    model = fit_model(config.model, X_train, y_train)
    report = detect_shift(model, X_test, X_ood, _detection_config(config, task))

    rows = []
    for j, comparison in enumerate(report.input_results):
        name = _feature_name(j)
        rows.append(_row('P(%s), P(%s_ood)' % (name, name), comparison.result, config.alpha))
    for j, comparison in enumerate(report.explanation_results):
        rows.append(_row('S_%d(f,X), S_%d(f,X_ood)' % (j + 1, j + 1), comparison.result,
                         config.alpha))
    distinct_input, distinct_explanation = report.counts
    metadata = dict(report.metadata, task=task.to_dict(), distinct_input=distinct_input,
                    distinct_explanation=distinct_explanation)
    return rows, metadata


def run_posterior(config):
    """Trains two models on swapped target relations and compares them."""
    task = _task(config, 'posterior')
    comparisons, metadata = posterior_shift_experiment(task, _detection_config(config, task),
                                                       model_family=config.model)
    rows = []
    for comparison in comparisons:
        if len(comparison.results) == 1:
            rows.append(_row(comparison.name, comparison.results[0], config.alpha))
            continue
        # One row per feature, named with the feature index.
        for j, result in enumerate(comparison.results):
            name = comparison.name.replace('X_ood', '%s_ood' % _feature_name(j)) \
                .replace('P(X)', 'P(%s)' % _feature_name(j)) \
                .replace('S(', 'S_%d(' % (j + 1))
            rows.append(_row(name, result, config.alpha))
    return rows, metadata


def run_unused(config):
    """Shifts a feature the target never uses and checks input, loss and explanations."""
    task = _task(config, 'unused')
    X_train, y_train, X_ood, y_ood = make_task_data(task)
    X_test, y_test = make_test_data(task)
    model = fit_model(config.model, X_train, y_train)
    report = detect_shift(model, X_test, X_ood, _detection_config(config, task),
                          y_src=y_test, y_new=y_ood)

    j = UNUSED_FEATURE_INDEX
    name = _feature_name(j)
    rows = [
        _row('P(%s_te), P(%s_ood)' % (name, name), report.input_results[j].result,
             config.alpha),
        _row('L(f,X_te), L(f,X_ood)', report.loss_result, config.alpha),
        _row('S_%d(f,X_te), S_%d(f,X_ood)' % (j + 1, j + 1),
             report.explanation_results[j].result, config.alpha),
    ]
    distinct_input, distinct_explanation = report.counts
    metadata = dict(report.metadata, task=task.to_dict(), distinct_input=distinct_input,
                    distinct_explanation=distinct_explanation,
                    used_features=getattr(model, 'used_features', lambda: None)())
    return rows, metadata


def _grid(config):
    if config.distance == ALL:
        distances = list(DistanceMethod)
    else:
        distances = [DISTANCE_NAMES[config.distance or 'wasserstein']]
    if config.input_mode == ALL:
        modes = [InputMode.DISTRIBUTION_SHIFT, InputMode.EXPLANATION_SHIFT, InputMode.BOTH,
                 InputMode.PREDICTION_SHIFT]
    else:
        modes = [INPUT_MODE_NAMES[config.input_mode]]
    return distances, modes


def run_quantify(config):
    """Predicts model degradation on unseen bootstraps from distance features.

    The source draw is split into equal random halves for training the model
    and for the reference. The unseen draw is split the same way into rows
    for the meta-model's training mixes and rows it is evaluated on.
    """
    task = _task(config, 'multivariate')
    X_source, y_source, X_unseen, y_unseen = make_task_data(task)
    X_train, y_train, X_test, y_test = train_test_split(
        X_source, y_source, derive_seed(task.seed, 'source-split'))
    X_mix, y_mix, X_ood, y_ood = train_test_split(X_unseen, y_unseen,
                                                  derive_seed(task.seed, 'ood-split'))
    model = fit_model(config.model, X_train, y_train)
    distances, modes = _grid(config)
    quantification = QuantificationConfig(B=config.B, m=config.m, distances=distances,
                                          input_modes=modes, seed=config.seed,
                                          n_jobs=config.n_jobs)
    detection = _detection_config(config, task)
    quantified, metadata = quantify_degradation(
        model, X_test, y_test, (X_test, y_test), (X_ood, y_ood), quantification,
        detection.for_source(model, X_test), mix_pool=(X_mix, y_mix))
    rows = [ResultRow(row.label, 'MAE', float(row.mae)) for row in quantified]
    metadata = dict(metadata, task=task.to_dict(), model=model.to_dict(),
                    split_rows={'train': y_train.size, 'test': y_test.size,
                                'ood_mix': y_mix.size, 'ood_eval': y_ood.size})
    return rows, metadata


def run_fairness_demo(config):
    """Thresholds the synthetic regression into decisions and compares group metrics.

    Labels and decisions are y > 0 and f(x) > 0; groups are split on the sign
    of the first feature. Rows give the equal opportunity gap on test and
    unseen data and KS comparisons of the protected group's explanations.
    """
    task = _task(config, 'multivariate')
    X_train, y_train, X_ood, y_ood = make_task_data(task)
    X_test, y_test = make_test_data(task)
    model = fit_model(config.model, X_train, y_train)
    explain_config = _detection_config(config, task).for_source(model, X_test)

    def groups(X):
        return np.where(X[:, 0] >= 0, REFERENCE_GROUP, PROTECTED_GROUP)

    rows = []
    fairness = {}
    for label, X, y in (('X_te', X_test, y_test), ('X_ood', X_ood, y_ood)):
        result = fairness_metrics(y > 0, predict(model, X) > 0, groups(X), REFERENCE_GROUP,
                                  PROTECTED_GROUP)
        fairness[label] = result.to_dict()
        rows.append(ResultRow('EOF(%s)' % label, 'EOF', float(result.eof)))

    protected_test = X_test[groups(X_test) == PROTECTED_GROUP]
    protected_ood = X_ood[groups(X_ood) == PROTECTED_GROUP]
    shap_test = explain(model, protected_test, explain_config).values
    shap_ood = explain(model, protected_ood, explain_config).values
    comparisons = per_feature_compare(shap_test, shap_ood, DistanceMethod.KS, config.alpha)
    for j, comparison in enumerate(comparisons):
        rows.append(_row('S_%d(f,X_te[%s]), S_%d(f,X_ood[%s])'
                         % (j + 1, PROTECTED_GROUP, j + 1, PROTECTED_GROUP),
                         comparison.result, config.alpha))
    metadata = {'task': task.to_dict(), 'model': model.to_dict(),
                'explain': explain_config.to_dict(), 'fairness': fairness,
                'reference_group': REFERENCE_GROUP, 'protected_group': PROTECTED_GROUP}
    return rows, metadata


EXPERIMENTS = {
    Experiment.MULTIVARIATE: run_multivariate,
    Experiment.POSTERIOR: run_posterior,
    Experiment.UNUSED: run_unused,
    Experiment.QUANTIFY: run_quantify,
    Experiment.FAIRNESS_DEMO: run_fairness_demo,
}


def run(config):
    """Runs the configured experiment.

    Args:
        config (ExperimentConfig): Validated settings.

    Returns:
        A Report embedding the configuration, result rows and metadata.
    """
    logger.info('Running %s with n=%d seed=%d', config.experiment.value, config.n, config.seed)
    start = time.perf_counter()
    rows, metadata = EXPERIMENTS[config.experiment](config)
    elapsed = time.perf_counter() - start
    logger.info('Finished %s in %.2f s', config.experiment.value, elapsed)

    metadata = dict(metadata, version=xshift.__version__)
    if config.timings:
        metadata['timings'] = {'total_seconds': elapsed}
    return Report(config.to_dict(), rows, metadata)
