"""A module to keep track of the settings of one experiment run."""
import enum
import os

from xshift.explain.explainer import ENGINE_NAMES
from xshift.models.predictor import MODEL_FAMILIES
from xshift.monitor.degradation import (DEFAULT_BOOTSTRAP_SIZE, DEFAULT_BOOTSTRAPS,
                                        INPUT_MODE_NAMES)
from xshift.stats.result import DISTANCE_NAMES
from xshift.synth.synthetic_task import DEFAULT_SAMPLE_COUNT
from xshift.util.errors import ConfigurationError
from xshift.util.random_sample import check_seed

SEED_ENVIRONMENT_VARIABLE = 'XSHIFT_SEED'
MIN_SAMPLE_COUNT = 100
QUICK_SAMPLE_COUNT = 5000
QUICK_BOOTSTRAPS = 200
QUICK_BOOTSTRAP_SIZE = 500


class Experiment(enum.Enum):
    MULTIVARIATE = 'multivariate'
    POSTERIOR = 'posterior'
    UNUSED = 'unused'
    QUANTIFY = 'quantify'
    FAIRNESS_DEMO = 'fairness-demo'


class OutputFormat(enum.Enum):
    JSON = 'json'
    CSV = 'csv'
    MARKDOWN = 'markdown'


ALL = 'all'


class ExperimentConfig:

    """Validated settings of one experiment run.

    Values left as None take the experiment default: the detection
    experiments compare with KS, quantification uses Wasserstein distances
    on explanations.

    Attributes:
        experiment (Experiment): Experiment to run.
        n (int): Rows per generated dataset.
        seed (int): Root seed of every random stream.
        alpha (float): Significance level of the verdicts.
        engine (str): Shapley engine name, None to choose from the model.
        distance (str): Distance name or 'all', None for the default.
        input_mode (str): Degradation input mode or 'all'.
        B (int): Bootstraps per quantification split.
        m (int): Rows per bootstrap.
        output_format (OutputFormat): Report serialization.
        output_path (str): File to write, None for stdout only.
        model (str): Model family, 'gbdt' or 'linear'.
        n_jobs (int): Worker threads.
        timings (bool): Whether wall-clock timings go into the report.
    """

    def __init__(self, experiment, n=DEFAULT_SAMPLE_COUNT, seed=0, alpha=0.05, engine=None,
                 distance=None, input_mode='explanation', B=DEFAULT_BOOTSTRAPS,
                 m=DEFAULT_BOOTSTRAP_SIZE, output_format='json', output_path=None,
                 model='gbdt', n_jobs=1, timings=False):
        """Inits ExperimentConfig and validates it.

        Raises:
            ConfigurationError: If a value is out of range or not a known name.
        """
        self.experiment = _parse_enum(Experiment, experiment, 'experiment')
        self.output_format = _parse_enum(OutputFormat, output_format, 'format')
        self.n = int(n)
        try:
            self.seed = check_seed(seed)
        except ValueError as err:
            raise ConfigurationError(str(err))
        self.alpha = float(alpha)
        self.engine = _check_name(engine, ENGINE_NAMES, 'engine')
        self.distance = _check_name(distance, DISTANCE_NAMES, 'distance', allow_all=True)
        self.input_mode = _check_name(input_mode, INPUT_MODE_NAMES, 'input mode',
                                      allow_all=True)
        self.B = int(B)
        self.m = int(m)
        self.output_path = output_path
        self.model = _check_name(model, dict.fromkeys(MODEL_FAMILIES), 'model')
        self.n_jobs = int(n_jobs)
        self.timings = bool(timings)

        if self.n < MIN_SAMPLE_COUNT:
            raise ConfigurationError('n must be at least %d, got %d' % (MIN_SAMPLE_COUNT, self.n))
        if not 0.0 < self.alpha < 1.0:
            raise ConfigurationError('alpha must be in (0, 1), got %g' % self.alpha)
        if self.B < 1 or self.m < 1:
            raise ConfigurationError('B and m must be positive, got B=%d m=%d' % (self.B, self.m))
        if self.n_jobs < 1:
            raise ConfigurationError('jobs must be positive, got %d' % self.n_jobs)
        if self.experiment != Experiment.QUANTIFY and self.distance not in (None, 'ks'):
            raise ConfigurationError('Experiment %s reports KS p-values; --distance only '
                                     'applies to quantify' % self.experiment.value)

    @classmethod
    def quick(cls, experiment, **overrides):
        """Returns a fast configuration: n=5000, B=200, m=500 unless overridden."""
        settings = {'n': QUICK_SAMPLE_COUNT, 'B': QUICK_BOOTSTRAPS, 'm': QUICK_BOOTSTRAP_SIZE}
        settings.update(overrides)
        return cls(experiment, **settings)

    def with_environment(self, environ=None):
        """Applies XSHIFT_SEED, which overrides the configured seed when set."""
        environ = os.environ if environ is None else environ
        value = environ.get(SEED_ENVIRONMENT_VARIABLE)
        if value is None or value == '':
            return self
        try:
            self.seed = check_seed(int(value))
        except ValueError:
            raise ConfigurationError('%s must be an unsigned 64-bit integer, got %r'
                                     % (SEED_ENVIRONMENT_VARIABLE, value))
        return self

    def to_dict(self):
        return {'experiment': self.experiment.value, 'n': self.n, 'seed': self.seed,
                'alpha': self.alpha, 'engine': self.engine, 'distance': self.distance,
                'input_mode': self.input_mode, 'B': self.B, 'm': self.m,
                'format': self.output_format.value, 'model': self.model,
                'n_jobs': self.n_jobs}

    def print_parameters(self):
        """Prints parameters.
        """
        print("Experiment parameters")
        print("\t experiment: %s" % (self.experiment.value))
        print("\t samples per dataset: %d" % (self.n))
        print("\t seed: %d" % (self.seed))
        print("\t alpha: %g" % (self.alpha))
        print("\t model: %s" % (self.model))
        print("\t engine: %s" % (self.engine or 'auto'))
        if self.experiment == Experiment.QUANTIFY:
            print("\t distance: %s" % (self.distance or 'wasserstein'))
            print("\t input mode: %s" % (self.input_mode))
            print("\t bootstraps: %d of %d rows" % (self.B, self.m))


def _parse_enum(enum_class, value, label):
    try:
        return enum_class(value)
    except ValueError:
        raise ConfigurationError('Unknown %s %r; expected one of %s'
                                 % (label, value, ', '.join(e.value for e in enum_class)))


def _check_name(value, names, label, allow_all=False):
    if value is None or value in names or (allow_all and value == ALL):
        return value
    choices = sorted(names) + ([ALL] if allow_all else [])
    raise ConfigurationError('Unknown %s %r; expected one of %s'
                             % (label, value, ', '.join(choices)))
