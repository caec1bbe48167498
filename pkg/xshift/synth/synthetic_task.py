"""A module to define and generate the synthetic shift tasks.

Three kinds of shift are covered: a change of feature dependence with
unchanged marginals (multivariate shift), a change of the target relation
with unchanged inputs (posterior shift), and a shift of a feature the
target never depends on (unused feature).
"""
import enum
import logging

import numpy as np

from xshift.synth.gaussian_spec import GaussianSpec
from xshift.synth.multivariate_normal import sample_mvn
from xshift.util.errors import ConfigurationError
from xshift.util.random_sample import check_seed, derive_seed, sample_standard_normal, \
    sample_subset

logger = logging.getLogger(__name__)

DEFAULT_SAMPLE_COUNT = 50000
# Read as a standard deviation, not a variance.
DEFAULT_NOISE_SD = 0.1
UNUSED_FEATURE_INDEX = 2
UNUSED_FEATURE_OFFSET = 1.0


class TaskName(enum.Enum):
    MULTIVARIATE_SHIFT = 'MultivariateShift'
    POSTERIOR_SHIFT = 'PosteriorShift'
    UNUSED_FEATURE = 'UnusedFeature'


class TargetRule(enum.Enum):
    """How the target Y is generated from the features."""
    PRODUCT = 'Product'
    PRODUCT_SQ12 = 'ProductSq12'
    PRODUCT_SQ21 = 'ProductSq21'
    LINEAR_2OF3 = 'Linear2of3'
    LINEAR_AB = 'LinearAB'
    LINEAR_BA = 'LinearBA'


_MIN_COLUMNS = {
    TargetRule.PRODUCT: 2,
    TargetRule.PRODUCT_SQ12: 2,
    TargetRule.PRODUCT_SQ21: 2,
    TargetRule.LINEAR_2OF3: 3,
    TargetRule.LINEAR_AB: 2,
    TargetRule.LINEAR_BA: 2,
}

DEFAULT_COEFFICIENTS = {'a': 0.0, 'alpha': 2.0, 'beta': 1.0, 'a0': 0.0, 'a1': 1.0, 'a2': 1.0}


def apply_target_rule(rule, X, coefficients):
    """Evaluates the noiseless target of a rule on a feature matrix.

    Args:
        rule (TargetRule): Target rule.
        X (2-D array): Feature matrix.
        coefficients (dict): Values for a, alpha, beta, a0, a1, a2.

    Returns:
        A 1-D array of noiseless targets.

    Raises:
        ConfigurationError: If X has too few columns for the rule.
    """
    if X.shape[1] < _MIN_COLUMNS[rule]:
        raise ConfigurationError('Target rule %s needs at least %d features, got %d'
                                 % (rule.value, _MIN_COLUMNS[rule], X.shape[1]))
    c = coefficients
    x1, x2 = X[:, 0], X[:, 1]
    if rule == TargetRule.PRODUCT:
        return x1 * x2
    if rule == TargetRule.PRODUCT_SQ12:
        return x1 ** 2 * x2
    if rule == TargetRule.PRODUCT_SQ21:
        return x1 * x2 ** 2
    if rule == TargetRule.LINEAR_2OF3:
        return c['a0'] + c['a1'] * x1 + c['a2'] * x2
    if rule == TargetRule.LINEAR_AB:
        return c['a'] + c['alpha'] * x1 + c['beta'] * x2
    return c['a'] + c['beta'] * x1 + c['alpha'] * x2


class SyntheticTask:

    """A synthetic source / out-of-distribution data generating process.

    Attributes:
        name (TaskName): Kind of shift.
        source_spec (GaussianSpec): Feature distribution of the source data.
        ood_spec (GaussianSpec): Feature distribution of the unseen data.
        target_rule (TargetRule): Target rule of the source data.
        ood_target_rule (TargetRule): Target rule of the unseen data; differs
            from target_rule only for posterior shift.
        coefficients (dict): Coefficients used by the linear rules.
        noise_sd (float): Standard deviation of the additive target noise.
        sample_count (int): Rows drawn per dataset.
        seed (int): 64-bit unsigned root seed.
    """

    def __init__(self, name, source_spec, ood_spec, target_rule, noise_sd=DEFAULT_NOISE_SD,
                 sample_count=DEFAULT_SAMPLE_COUNT, seed=0, ood_target_rule=None,
                 coefficients=None):
        """Inits SyntheticTask and validates it.

        Raises:
            ConfigurationError: If the task is inconsistent.
        """
        self.name = TaskName(name)
        self.source_spec = source_spec
        self.ood_spec = ood_spec
        self.target_rule = TargetRule(target_rule)
        self.ood_target_rule = TargetRule(ood_target_rule or target_rule)
        self.coefficients = dict(DEFAULT_COEFFICIENTS)
        self.coefficients.update(coefficients or {})
        self.noise_sd = float(noise_sd)
        self.sample_count = int(sample_count)
        self.seed = check_seed(seed)

        if not isinstance(source_spec, GaussianSpec) or not isinstance(ood_spec, GaussianSpec):
            raise ConfigurationError('Task specs must be GaussianSpec instances')
        if source_spec.dimension != ood_spec.dimension:
            raise ConfigurationError('Source and ood specs differ in dimension')
        if self.noise_sd < 0:
            raise ConfigurationError('noise_sd must be nonnegative, got %g' % self.noise_sd)
        if self.sample_count < 1:
            raise ConfigurationError('sample_count must be positive, got %d' % self.sample_count)
        for rule in (self.target_rule, self.ood_target_rule):
            if source_spec.dimension < _MIN_COLUMNS[rule]:
                raise ConfigurationError('Target rule %s needs at least %d features, got %d'
                                         % (rule.value, _MIN_COLUMNS[rule],
                                            source_spec.dimension))
        if self.name == TaskName.POSTERIOR_SHIFT:
            if source_spec != ood_spec or not np.array_equal(
                    source_spec.covariance, np.eye(source_spec.dimension)):
                raise ConfigurationError('Posterior shift needs identical specs with identity '
                                         'covariance')
        if self.name == TaskName.UNUSED_FEATURE and source_spec.dimension <= UNUSED_FEATURE_INDEX:
            raise ConfigurationError('Unused feature task needs at least 3 features')

    def with_seed(self, seed):
        """Returns a copy of the task with another root seed."""
        return self.replace(seed=seed)

    def replace(self, **changes):
        """Returns a copy of the task with some fields changed."""
        fields = dict(name=self.name, source_spec=self.source_spec, ood_spec=self.ood_spec,
                      target_rule=self.target_rule, noise_sd=self.noise_sd,
                      sample_count=self.sample_count, seed=self.seed,
                      ood_target_rule=self.ood_target_rule, coefficients=self.coefficients)
        fields.update(changes)
        return SyntheticTask(**fields)

    def derived_seeds(self):
        """Returns the seeds of every stream the task draws from."""
        return {label: derive_seed(self.seed, label)
                for label in ('train-x', 'train-noise', 'test-x', 'test-noise',
                              'ood-x', 'ood-noise')}

    def to_dict(self):
        """Returns a JSON-ready description of the task."""
        return {
            'name': self.name.value,
            'source_spec': self.source_spec.to_dict(),
            'ood_spec': self.ood_spec.to_dict(),
            'target_rule': self.target_rule.value,
            'ood_target_rule': self.ood_target_rule.value,
            'coefficients': dict(sorted(self.coefficients.items())),
            'noise_sd': self.noise_sd,
            'noise_sd_interpretation': 'standard deviation',
            'sample_count': self.sample_count,
            'seed': self.seed,
            'derived_seeds': self.derived_seeds(),
        }


def _targets(task, rule, X, noise_label):
    noise = task.noise_sd * sample_standard_normal(derive_seed(task.seed, noise_label),
                                                   X.shape[0])
    return apply_target_rule(rule, X, task.coefficients) + noise


def make_task_data(task):
    """Generates training and out-of-distribution data for a task.

    For an unused-feature task the unseen data is the test draw (see
    make_test_data) with the third column shifted by +1.

    Args:
        task (SyntheticTask): Task to generate.

    Returns:
        A tuple (X_train, y_train, X_ood, y_ood).
    """
    n = task.sample_count
    X_train = sample_mvn(task.source_spec, n, derive_seed(task.seed, 'train-x'))
    y_train = _targets(task, task.target_rule, X_train, 'train-noise')

    if task.name == TaskName.UNUSED_FEATURE:
        X_ood, y_ood = make_test_data(task)
        X_ood[:, UNUSED_FEATURE_INDEX] += UNUSED_FEATURE_OFFSET
        y_ood = _targets(task, task.ood_target_rule, X_ood, 'ood-noise')
    else:
        X_ood = sample_mvn(task.ood_spec, n, derive_seed(task.seed, 'ood-x'))
        y_ood = _targets(task, task.ood_target_rule, X_ood, 'ood-noise')
    logger.debug('Generated %s data with %d rows per split', task.name.value, n)
    return X_train, y_train, X_ood, y_ood


def make_test_data(task):
    """Generates a hold-out test set from the source distribution.

    For an unused-feature task the test draw shares its streams with the
    unseen data, so X_ood differs from X_test only in the third column.

    Args:
        task (SyntheticTask): Task to generate.

    Returns:
        A tuple (X_test, y_test).
    """
    if task.name == TaskName.UNUSED_FEATURE:
        x_label, noise_label = 'ood-x', 'ood-noise'
    else:
        x_label, noise_label = 'test-x', 'test-noise'
    X_test = sample_mvn(task.source_spec, task.sample_count, derive_seed(task.seed, x_label))
    return X_test, _targets(task, task.target_rule, X_test, noise_label)


def train_test_split(X, y, seed, test_fraction=0.5):
    """Splits rows into uniformly random train and test partitions.

    Args:
        X (2-D array): Features.
        y (array): Targets.
        seed (int): Seed of the partition.
        test_fraction (float): Share of rows assigned to the test split.

    Returns:
        A tuple (X_train, y_train, X_test, y_test); rows keep their order.
    """
    if not 0.0 < test_fraction < 1.0:
        raise ConfigurationError('test_fraction must be in (0, 1), got %g' % test_fraction)
    num_rows = X.shape[0]
    test_rows = sample_subset(seed, num_rows, int(round(num_rows * test_fraction)))
    is_test = np.zeros(num_rows, dtype=bool)
    is_test[test_rows] = True
    return X[~is_test], y[~is_test], X[is_test], y[is_test]


def standard_tasks(n=DEFAULT_SAMPLE_COUNT, seed=0, noise_sd=DEFAULT_NOISE_SD):
    """Builds the named synthetic tasks of the explanation-shift experiments.

    Args:
        n (int): Rows per dataset.
        seed (int): Root seed shared by all tasks.
        noise_sd (float): Target noise standard deviation.

    Returns:
        A dict mapping task keys to SyntheticTask instances.
    """
    independent = GaussianSpec.standard(2)
    correlated = GaussianSpec.bivariate(0.0, 0.0, 1.0, 1.0, 0.2)
    shifted_mean = GaussianSpec.standard(2, mean=1.0)
    trivariate = GaussianSpec.standard(3)
    common = dict(noise_sd=noise_sd, sample_count=n, seed=seed)
    return {
        'multivariate': SyntheticTask(TaskName.MULTIVARIATE_SHIFT, independent, correlated,
                                      TargetRule.PRODUCT, **common),
        'multivariate-linear': SyntheticTask(TaskName.MULTIVARIATE_SHIFT, independent,
                                             correlated, TargetRule.LINEAR_AB,
                                             coefficients={'alpha': 1.0, 'beta': 1.0},
                                             **common),
        'posterior': SyntheticTask(TaskName.POSTERIOR_SHIFT, shifted_mean, shifted_mean,
                                   TargetRule.PRODUCT_SQ12,
                                   ood_target_rule=TargetRule.PRODUCT_SQ21, **common),
        'posterior-linear': SyntheticTask(TaskName.POSTERIOR_SHIFT, shifted_mean, shifted_mean,
                                          TargetRule.LINEAR_AB,
                                          ood_target_rule=TargetRule.LINEAR_BA, **common),
        'unused': SyntheticTask(TaskName.UNUSED_FEATURE, trivariate, trivariate,
                                TargetRule.PRODUCT, **common),
        'unused-linear': SyntheticTask(TaskName.UNUSED_FEATURE, trivariate, trivariate,
                                       TargetRule.LINEAR_2OF3, **common),
    }
