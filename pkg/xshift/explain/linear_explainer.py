"""A module to explain linear models under feature independence."""
import numpy as np

from xshift.explain.explanation_matrix import ExplanationMatrix, ExplanationMethod
from xshift.models.linear_model import LinearModel
from xshift.util.errors import DimensionMismatchError
from xshift.util.matrix_operations import as_matrix, as_vector, check_num_columns


def shap_linear_independent(model, X, mu):
    """Computes closed-form Shapley values a_j (x_j - mu_j) of a linear model.

    Args:
        model (LinearModel): Model to explain.
        X (2-D array-like): Rows to explain.
        mu (array-like): Feature means defining the baseline.

    Returns:
        An ExplanationMatrix with expected value intercept + dot(a, mu).

    Raises:
        DimensionMismatchError: If X, mu and the model disagree in dimension.
    """
    assert isinstance(model, LinearModel)
    X = as_matrix(X)
    mu = as_vector(mu, name='mu')
    check_num_columns(X, model.num_features)
    if mu.size != model.num_features:
        raise DimensionMismatchError('mu has length %d, model has %d features'
                                     % (mu.size, model.num_features))
    values = (X - mu) * model.coefficients
    return ExplanationMatrix(values, model.intercept + np.dot(model.coefficients, mu),
                             ExplanationMethod.LINEAR_INDEPENDENT)
