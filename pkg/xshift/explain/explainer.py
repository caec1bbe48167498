"""A module to select a Shapley engine for a model and explain data with it."""
import logging

from xshift.explain.background_set import BackgroundSet
from xshift.explain.explanation_matrix import ExplanationMethod
from xshift.explain.gaussian_explainer import shap_gaussian_observational
from xshift.explain.interventional_explainer import shap_interventional
from xshift.explain.linear_explainer import shap_linear_independent
from xshift.models.linear_model import LinearModel
from xshift.util.errors import ConfigurationError

logger = logging.getLogger(__name__)

ENGINE_NAMES = {
    'linear-indep': ExplanationMethod.LINEAR_INDEPENDENT,
    'gaussian-obs': ExplanationMethod.GAUSSIAN_OBSERVATIONAL,
    'interventional': ExplanationMethod.INTERVENTIONAL_ENUMERATION,
}


def engine_from_name(name):
    """Parses a CLI engine name ('linear-indep', 'gaussian-obs', 'interventional')."""
    try:
        return ENGINE_NAMES[name]
    except KeyError:
        raise ConfigurationError('Unknown engine %r; expected one of %s'
                                 % (name, ', '.join(sorted(ENGINE_NAMES))))


class ExplainConfig:

    """Engine selection and the auxiliary data the engines need.

    Attributes:
        engine (ExplanationMethod): Engine to use, or None to pick one from
            the model and the auxiliaries given.
        spec (GaussianSpec): Feature distribution for the observational engine.
        background (BackgroundSet): Reference rows for the interventional engine.
        mu (array): Feature means for the independent linear engine; the
            background means are used when mu is None.
        n_jobs (int): Worker threads for row-parallel engines.
    """

    def __init__(self, engine=None, spec=None, background=None, mu=None, n_jobs=1):
        self.engine = None if engine is None else ExplanationMethod(engine)
        self.spec = spec
        self.background = background
        self.mu = mu
        self.n_jobs = int(n_jobs)

    def resolve_engine(self, model):
        """Returns the engine used for the model.

        Linear models with a Gaussian spec use the observational engine;
        any model with a background uses interventional enumeration.

        Raises:
            ConfigurationError: If the engine cannot run with the given
                model and auxiliaries.
        """
        engine = self.engine
        if engine is None:
            if isinstance(model, LinearModel) and self.spec is not None:
                engine = ExplanationMethod.GAUSSIAN_OBSERVATIONAL
            elif self.background is not None:
                engine = ExplanationMethod.INTERVENTIONAL_ENUMERATION
            elif isinstance(model, LinearModel) and self.mu is not None:
                engine = ExplanationMethod.LINEAR_INDEPENDENT
            else:
                raise ConfigurationError('No explanation engine applies: give a Gaussian spec '
                                         '(linear models), a background set, or feature means')

        if engine != ExplanationMethod.INTERVENTIONAL_ENUMERATION and \
                not isinstance(model, LinearModel):
            raise ConfigurationError('Engine %s only explains linear models' % engine.value)
        if engine == ExplanationMethod.GAUSSIAN_OBSERVATIONAL and self.spec is None:
            raise ConfigurationError('The Gaussian observational engine needs a spec')
        if engine == ExplanationMethod.INTERVENTIONAL_ENUMERATION and self.background is None:
            raise ConfigurationError('The interventional engine needs a background set')
        if engine == ExplanationMethod.LINEAR_INDEPENDENT and self.mu is None \
                and self.background is None:
            raise ConfigurationError('The independent linear engine needs feature means')
        return engine

    def to_dict(self):
        return {
            'engine': self.engine.value if self.engine else None,
            'spec': self.spec.to_dict() if self.spec is not None else None,
            'background': self.background.to_dict() if self.background is not None else None,
            'n_jobs': self.n_jobs,
        }


def explain(model, X, config):
    """Explains every row of X with the engine the config selects.

    Args:
        model: Trained model.
        X (2-D array-like): Rows to explain.
        config (ExplainConfig): Engine selection and auxiliaries.

    Returns:
        An ExplanationMatrix whose method records the engine used.
    """
    engine = config.resolve_engine(model)
    logger.debug('Dispatching %s to the %s engine', type(model).__name__, engine.value)
    if engine == ExplanationMethod.GAUSSIAN_OBSERVATIONAL:
        return shap_gaussian_observational(model, X, config.spec, n_jobs=config.n_jobs)
    if engine == ExplanationMethod.INTERVENTIONAL_ENUMERATION:
        assert isinstance(config.background, BackgroundSet)
        return shap_interventional(model, X, config.background, n_jobs=config.n_jobs)
    mu = config.mu if config.mu is not None else config.background.means
    return shap_linear_independent(model, X, mu)
