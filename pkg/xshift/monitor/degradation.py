"""A module to quantify model degradation from distribution distances.

A linear meta-model g maps per-feature distances between a reference
sample and a bootstrap sample to the model's MSE on that bootstrap. g is
trained on bootstraps that mix source rows with labelled shifted rows in
seeded proportions, and evaluated on bootstraps of unseen data, where it
predicts performance without needing labels.
"""
import dataclasses
import enum
import logging

import numpy as np

from xshift.explain.explainer import explain
from xshift.models.linear_model import LinearModel, fit_ols, fit_ridge
from xshift.models.predictor import predict
from xshift.monitor.shift_detector import DetectionConfig
from xshift.stats.feature_comparison import distance_vector
from xshift.stats.result import DistanceMethod
from xshift.stats.stability_index import DEFAULT_BINS
from xshift.util.errors import ConfigurationError, EmptyInputError, SingularSystemError
from xshift.util.matrix_operations import as_matrix, as_vector
from xshift.util.parallel import parallel_map
from xshift.util.random_sample import derive_seed, sample_indices, sample_open_uniform

logger = logging.getLogger(__name__)

RIDGE_FALLBACK_PENALTY = 1e-6
DEFAULT_BOOTSTRAPS = 2000
DEFAULT_BOOTSTRAP_SIZE = 1000


class InputMode(enum.Enum):
    """Which distances feed the meta-model."""
    DISTRIBUTION_SHIFT = 'DistributionShift'
    EXPLANATION_SHIFT = 'ExplanationShift'
    BOTH = 'Both'
    PREDICTION_SHIFT = 'PredictionShift'


INPUT_MODE_NAMES = {
    'distribution': InputMode.DISTRIBUTION_SHIFT,
    'explanation': InputMode.EXPLANATION_SHIFT,
    'both': InputMode.BOTH,
    'prediction': InputMode.PREDICTION_SHIFT,
}


def input_mode_from_name(name):
    """Parses a CLI input mode ('distribution', 'explanation', 'both', 'prediction')."""
    try:
        return INPUT_MODE_NAMES[name]
    except KeyError:
        raise ConfigurationError('Unknown input mode %r; expected one of %s'
                                 % (name, ', '.join(sorted(INPUT_MODE_NAMES))))


def feature_count(input_mode, num_features):
    """Returns the number of distance features an input mode produces."""
    if input_mode == InputMode.BOTH:
        return 2 * num_features
    if input_mode == InputMode.PREDICTION_SHIFT:
        return 1
    return num_features


class DegradationModel:

    """A linear meta-model predicting bootstrap MSE from distance features.

    Attributes:
        estimator (LinearModel): Fitted meta-model.
        distance_method (DistanceMethod): Distance used for the features,
            None for the dummy baseline.
        input_mode (InputMode): Source of the features, None for the dummy.
        training_meta (dict): Bootstrap count, size, seeds and fallbacks.
    """

    def __init__(self, estimator, distance_method, input_mode, training_meta=None):
        self.estimator = estimator
        self.distance_method = distance_method
        self.input_mode = input_mode
        self.training_meta = dict(training_meta or {})

    def predict(self, features):
        return self.estimator.predict(features)

    def to_dict(self):
        return {'estimator': self.estimator.to_dict(),
                'distance_method': self.distance_method.value if self.distance_method else None,
                'input_mode': self.input_mode.value if self.input_mode else None,
                'training_meta': self.training_meta}


class _Pool:

    """Rows that bootstraps are drawn from, with their model outputs precomputed.

    Explaining every pool row once is equivalent to explaining each
    bootstrap, because rows are explained independently against a fixed
    baseline.
    """

    def __init__(self, X, y, predictions, explanations=None):
        self.X = X
        self.y = y
        self.predictions = predictions
        self.explanations = explanations

    @classmethod
    def from_model(cls, model, X, y, explain_config, need_explanations):
        X = as_matrix(X, name='pool X')
        y = as_vector(y, name='pool y')
        if X.shape[0] != y.size:
            raise ValueError('Pool has %d rows but %d targets' % (X.shape[0], y.size))
        explanations = explain(model, X, explain_config).values if need_explanations else None
        return cls(X, y, predict(model, X), explanations)

    @property
    def size(self):
        return self.X.shape[0]

    def concatenate(self, other):
        """Returns a pool holding this pool's rows followed by other's."""
        explanations = None
        if self.explanations is not None and other.explanations is not None:
            explanations = np.vstack([self.explanations, other.explanations])
        return _Pool(np.vstack([self.X, other.X]), np.concatenate([self.y, other.y]),
                     np.concatenate([self.predictions, other.predictions]), explanations)


def _features(input_mode, method, reference, pool, rows, bins):
    if input_mode == InputMode.PREDICTION_SHIFT:
        return distance_vector(reference.predictions[:, np.newaxis],
                               pool.predictions[rows][:, np.newaxis], method, bins)
    parts = []
    if input_mode in (InputMode.DISTRIBUTION_SHIFT, InputMode.BOTH):
        parts.append(distance_vector(reference.X, pool.X[rows], method, bins))
    if input_mode in (InputMode.EXPLANATION_SHIFT, InputMode.BOTH):
        parts.append(distance_vector(reference.explanations, pool.explanations[rows], method,
                                     bins))
    return np.concatenate(parts)


def mixed_bootstrap_rows(seed, index, pool_size, mix_size, m):
    """Draws the rows of one mixed bootstrap.

    The share of rows taken from the mix pool is uniform on [0, 1] and
    seeded per bootstrap; the rest come from the first pool. Mix pool rows
    are offset by pool_size, as in pool.concatenate(mix_pool).

    Returns:
        A tuple (rows, mix_fraction).
    """
    mix_fraction = float(sample_open_uniform(derive_seed(seed, 'mix/%d' % index), 1)[0])
    mix_count = int(round(mix_fraction * m))
    own = sample_indices(derive_seed(seed, 'bootstrap/%d' % index), pool_size, m - mix_count)
    mixed = sample_indices(derive_seed(seed, 'bootstrap-mix/%d' % index), mix_size, mix_count)
    return np.concatenate([own, mixed + pool_size]), mix_fraction


def _bootstrap_dataset(reference, pool, B, m, method, input_mode, seed, bins, n_jobs,
                       mix_pool=None):
    if pool.size == 0 or (mix_pool is not None and mix_pool.size == 0):
        raise EmptyInputError('Bootstrap pool is empty')
    if B < 1 or m < 1:
        raise ConfigurationError('Need B >= 1 and m >= 1, got B=%d m=%d' % (B, m))
    drawn = pool if mix_pool is None else pool.concatenate(mix_pool)

    def one_bootstrap(index):
        if mix_pool is None:
            rows = sample_indices(derive_seed(seed, 'bootstrap/%d' % index), pool.size, m)
        else:
            rows, _ = mixed_bootstrap_rows(seed, index, pool.size, mix_pool.size, m)
        residual = drawn.predictions[rows] - drawn.y[rows]
        return (_features(input_mode, method, reference, drawn, rows, bins),
                float(residual @ residual / m))

    results = parallel_map(one_bootstrap, list(range(B)), n_jobs)
    features = np.vstack([row for row, _ in results])
    targets = np.array([target for _, target in results])
    return features, targets


def build_degradation_data(model, X_src, y_src, pool, B, m, distance_method, input_mode, seed,
                           explain_config=None, bins=DEFAULT_BINS, n_jobs=1, mix_pool=None):
    """Builds the bootstrap regression dataset of the meta-model.

    For each b < B, m rows are drawn with replacement from the pool. The
    feature vector holds per-column distances between the source data and
    the bootstrap (inputs, explanations, both, or predictions) and the
    target is the model's MSE on the bootstrap.

    Args:
        model: Trained model.
        X_src (2-D array-like): Reference rows.
        y_src (array-like): Reference targets.
        pool (tuple): (X rows, y rows) to draw bootstraps from.
        B (int): Number of bootstraps.
        m (int): Rows per bootstrap.
        distance_method (DistanceMethod): Distance per column.
        input_mode (InputMode): Which distances to use.
        seed (int): Seed; bootstrap b uses its own derived stream.
        explain_config (ExplainConfig): Explanation engine with a baseline
            built from X_src; derived from X_src when None.
        bins (int): PSI bin count.
        n_jobs (int): Worker threads over bootstraps.
        mix_pool (tuple): Optional second (X, y) pool. When given, each
            bootstrap takes a seeded uniform share of its rows from it (see
            mixed_bootstrap_rows).

    Returns:
        A tuple (features, targets) of shapes (B, k) and (B,).
    """
    input_mode = InputMode(input_mode)
    method = DistanceMethod(distance_method)
    needs_explanations = input_mode in (InputMode.EXPLANATION_SHIFT, InputMode.BOTH)
    if explain_config is None and needs_explanations:
        explain_config = DetectionConfig(seed=seed).for_source(model, as_matrix(X_src))
    reference = _Pool.from_model(model, X_src, y_src, explain_config, needs_explanations)
    pool = _Pool.from_model(model, pool[0], pool[1], explain_config, needs_explanations)
    if mix_pool is not None:
        mix_pool = _Pool.from_model(model, mix_pool[0], mix_pool[1], explain_config,
                                    needs_explanations)
    return _bootstrap_dataset(reference, pool, B, m, method, input_mode, seed, bins, n_jobs,
                              mix_pool)


def fit_degradation(features, targets, distance_method=None, input_mode=None,
                    training_meta=None):
    """Fits the linear meta-model by OLS, falling back to ridge when singular.

    Args:
        features (2-D array-like): B x k distance features.
        targets (array-like): B bootstrap MSEs.
        distance_method (DistanceMethod): Recorded on the model.
        input_mode (InputMode): Recorded on the model.
        training_meta (dict): Extra metadata to record.

    Returns:
        A DegradationModel.
    """
    meta = dict(training_meta or {})
    try:
        estimator = fit_ols(features, targets)
        meta['ridge_fallback'] = None
    except SingularSystemError as err:
        logger.warning('OLS meta-model is singular (%s); using ridge with lambda=%g', err,
                       RIDGE_FALLBACK_PENALTY)
        estimator = fit_ridge(features, targets, RIDGE_FALLBACK_PENALTY)
        meta['ridge_fallback'] = RIDGE_FALLBACK_PENALTY
    return DegradationModel(estimator, distance_method, input_mode, meta)


def fit_dummy(targets, num_features):
    """Builds the dummy baseline that always predicts the mean training target."""
    targets = as_vector(targets, name='targets')
    return DegradationModel(LinearModel(targets.mean(), np.zeros(num_features)), None, None,
                            {'dummy': True})


def evaluate_degradation(model_g, eval_features, eval_targets, train_mse=None):
    """Computes the meta-model's mean absolute error on evaluation bootstraps.

    Args:
        model_g (DegradationModel): Fitted meta-model.
        eval_features (2-D array-like): Distance features of the evaluation bootstraps.
        eval_targets (array-like): Realized MSEs of the evaluation bootstraps.
        train_mse (float): Reference MSE; when given, the mean realized
            degradation relative to it is logged.

    Returns:
        The MAE mean |g(features_b) - target_b|.
    """
    eval_targets = as_vector(eval_targets, name='eval_targets')
    predicted = model_g.predict(eval_features)
    if train_mse is not None:
        logger.info('Mean realized degradation %.6g, mean predicted degradation %.6g',
                    np.mean(eval_targets) - train_mse, np.mean(predicted) - train_mse)
    return float(np.mean(np.abs(predicted - eval_targets)))


@dataclasses.dataclass
class QuantificationRow:

    """MAE of one meta-model configuration.

    Attributes:
        input_mode (InputMode): Features used, None for the dummy baseline.
        distance_method (DistanceMethod): Distance used, None for the dummy.
        mae (float): Mean absolute error on the evaluation bootstraps.
    """

    input_mode: object
    distance_method: object
    mae: float

    @property
    def label(self):
        if self.input_mode is None:
            return 'Dummy Mean Regressor'
        return '%s / %s' % (self.input_mode.value, self.distance_method.value)


class QuantificationConfig:

    """Settings of the degradation quantification experiment.

    Attributes:
        B (int): Bootstraps for training and for evaluation.
        m (int): Rows per bootstrap.
        distances (list (DistanceMethod)): Distances to evaluate.
        input_modes (list (InputMode)): Input modes to evaluate.
        seed (int): Root seed.
        bins (int): PSI bin count.
        n_jobs (int): Worker threads.
        mix_training (bool): Whether training bootstraps take a seeded
            uniform share of their rows from the unseen pool. When False
            they are drawn from the source pool only.
    """

    def __init__(self, B=DEFAULT_BOOTSTRAPS, m=DEFAULT_BOOTSTRAP_SIZE, distances=None,
                 input_modes=None, seed=0, bins=DEFAULT_BINS, n_jobs=1, mix_training=True):
        self.B = int(B)
        self.m = int(m)
        self.distances = [DistanceMethod(d) for d in (distances or [DistanceMethod.WASSERSTEIN1])]
        self.input_modes = [InputMode(mode) for mode in
                            (input_modes or [InputMode.EXPLANATION_SHIFT])]
        self.seed = seed
        self.bins = int(bins)
        self.n_jobs = int(n_jobs)
        self.mix_training = bool(mix_training)

    def to_dict(self):
        return {'B': self.B, 'm': self.m, 'distances': [d.value for d in self.distances],
                'input_modes': [mode.value for mode in self.input_modes], 'seed': self.seed,
                'bins': self.bins, 'n_jobs': self.n_jobs,
                'train_pool': 'source+ood' if self.mix_training else 'source',
                'train_ood_fraction': 'uniform(0, 1)' if self.mix_training else 0.0,
                'eval_pool': 'ood'}


def quantify_degradation(model, X_ref, y_ref, source_pool, ood_pool, config=None,
                         explain_config=None, mix_pool=None):
    """Trains meta-models on mixed bootstraps and scores them on unseen bootstraps.

    Each training bootstrap draws a seeded uniform share of its rows from
    the mix pool and the rest from the source pool, so the training
    distances and MSEs span no shift through full shift. Evaluation
    bootstraps come from the unseen pool only.

    Args:
        model: Trained model whose degradation is predicted.
        X_ref (2-D array-like): Reference rows distances are measured from.
        y_ref (array-like): Reference targets.
        source_pool (tuple): (X, y) drawn from the source distribution.
        ood_pool (tuple): (X, y) drawn from the unseen distribution.
        config (QuantificationConfig): Bootstrap settings and grid.
        explain_config (ExplainConfig): Explanation engine with a baseline
            from X_ref; derived from X_ref when None.
        mix_pool (tuple): (X, y) of labelled shifted rows for the training
            mixes, disjoint from ood_pool; ood_pool itself when None.

    Returns:
        A tuple (rows, metadata): the dummy row followed by one row per
        (input mode, distance) pair.
    """
    config = config or QuantificationConfig()
    X_ref = as_matrix(X_ref, name='X_ref')
    if explain_config is None:
        explain_config = DetectionConfig(seed=config.seed).for_source(model, X_ref)
    needs_explanations = any(mode in (InputMode.EXPLANATION_SHIFT, InputMode.BOTH)
                             for mode in config.input_modes)
    reference = _Pool.from_model(model, X_ref, y_ref, explain_config, needs_explanations)
    train_pool = _Pool.from_model(model, source_pool[0], source_pool[1], explain_config,
                                  needs_explanations)
    eval_pool = _Pool.from_model(model, ood_pool[0], ood_pool[1], explain_config,
                                 needs_explanations)
    if not config.mix_training:
        mix_pool = None
    elif mix_pool is None:
        mix_pool = eval_pool
    else:
        mix_pool = _Pool.from_model(model, mix_pool[0], mix_pool[1], explain_config,
                                    needs_explanations)
    train_seed = derive_seed(config.seed, 'train-bootstraps')
    eval_seed = derive_seed(config.seed, 'eval-bootstraps')
    reference_mse = float(np.mean((reference.predictions - reference.y) ** 2))

    rows = []
    dummy_row = None
    for method in config.distances:
        for mode in config.input_modes:
            train_x, train_y = _bootstrap_dataset(reference, train_pool, config.B, config.m,
                                                  method, mode, train_seed, config.bins,
                                                  config.n_jobs, mix_pool)
            eval_x, eval_y = _bootstrap_dataset(reference, eval_pool, config.B, config.m,
                                                method, mode, eval_seed, config.bins,
                                                config.n_jobs)
            model_g = fit_degradation(train_x, train_y, method, mode,
                                      {'B': config.B, 'm': config.m, 'seed': train_seed,
                                       'mixed': config.mix_training})
            rows.append(QuantificationRow(mode, method,
                                          evaluate_degradation(model_g, eval_x, eval_y,
                                                               reference_mse)))
            if dummy_row is None:
                dummy = fit_dummy(train_y, train_x.shape[1])
                dummy_row = QuantificationRow(None, None,
                                              evaluate_degradation(dummy, eval_x, eval_y))
            logger.info('%s: MAE %.6g', rows[-1].label, rows[-1].mae)

    metadata = {'quantification': config.to_dict(), 'reference_mse': reference_mse,
                'train_seed': train_seed, 'eval_seed': eval_seed,
                'explain': explain_config.to_dict()}
    if mix_pool is not None:
        metadata['mix_pool_rows'] = mix_pool.size
    return [dummy_row] + rows, metadata
