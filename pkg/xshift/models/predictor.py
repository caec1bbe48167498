"""A module to train models by family name and run their predictions."""
from xshift.models.gbdt_model import fit_gbdt
from xshift.models.linear_model import fit_ols
from xshift.util.errors import ConfigurationError
from xshift.util.matrix_operations import as_matrix


def predict(model, X):
    """Predicts the target of every row of X.

    Args:
        model: A LinearModel, GbdtModel or any object with a predict(X) method.
        X (2-D array-like): Feature matrix.

    Returns:
        A 1-D float64 array of predictions.

    Raises:
        DimensionMismatchError: If X does not have the model's feature count.
    """
    return model.predict(as_matrix(X))


def mean_squared_error(model, X, y):
    """Returns the mean squared error of model on (X, y)."""
    residual = predict(model, X) - y
    return float(residual @ residual / residual.size)


def squared_errors(model, X, y):
    """Returns the per-row squared error of model on (X, y)."""
    return (predict(model, X) - y) ** 2


MODEL_FAMILIES = ('gbdt', 'linear')


def fit_model(family, X, y, gbdt_params=None):
    """Trains a model of the named family ('gbdt' or 'linear') on (X, y)."""
    if family == 'gbdt':
        return fit_gbdt(X, y, gbdt_params)
    if family == 'linear':
        return fit_ols(X, y)
    raise ConfigurationError('Unknown model family %r; expected one of %s'
                             % (family, ', '.join(MODEL_FAMILIES)))
