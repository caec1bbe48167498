"""A module to explain linear models under a Gaussian feature distribution.

The coalition value of T is the model evaluated at the conditional mean
E[X | X_T = x_T], which for a linear model equals the conditional
expectation of the prediction.
"""
import logging

import numpy as np

from xshift.explain.explanation_matrix import ExplanationMatrix, ExplanationMethod
from xshift.models.linear_model import LinearModel
from xshift.synth.gaussian_spec import GaussianSpec
from xshift.util.combinatorics import (MAX_EXACT_PLAYERS, coalition_members,
                                       combine_coalition_values)
from xshift.util.errors import CostGuardError, DimensionMismatchError
from xshift.util.matrix_operations import as_matrix, check_num_columns, conditional_mean
from xshift.util.parallel import map_row_chunks

logger = logging.getLogger(__name__)


def _coalition_values(model, spec, X):
    p = model.num_features
    baseline = np.dot(model.coefficients, spec.mean)
    values = np.empty((X.shape[0], 1 << p))
    for mask in range(1 << p):
        expected_x = conditional_mean(spec.mean, spec.covariance, coalition_members(mask, p), X)
        values[:, mask] = expected_x @ model.coefficients - baseline
    return values


def shap_gaussian_observational(model, X, spec, n_jobs=1):
    """Computes exact observational Shapley values of a linear model.

    Every coalition T is enumerated and valued by
    val(T) = dot(a, E[X | X_T = x_T]) - dot(a, mu) under the multivariate
    normal spec.

    Args:
        model (LinearModel): Model to explain.
        X (2-D array-like): Rows to explain.
        spec (GaussianSpec): Feature distribution.
        n_jobs (int): Worker threads for the row map.

    Returns:
        An ExplanationMatrix with expected value intercept + dot(a, mu).

    Raises:
        DimensionMismatchError: If the spec, model and X disagree in dimension.
        CostGuardError: If there are more than 20 features.
        ConditionalExpectationError: If a covariance sub-block is singular.
    """
    assert isinstance(model, LinearModel)
    assert isinstance(spec, GaussianSpec)
    X = as_matrix(X)
    p = model.num_features
    check_num_columns(X, p)
    if spec.dimension != p:
        raise DimensionMismatchError('Spec dimension %d does not match model dimension %d'
                                     % (spec.dimension, p))
    if p > MAX_EXACT_PLAYERS:
        raise CostGuardError('Exact observational enumeration is limited to %d features, got '
                             '%d; explain a subset of features' % (MAX_EXACT_PLAYERS, p))

    values = map_row_chunks(
        lambda rows: combine_coalition_values(_coalition_values(model, spec, rows), p),
        X, n_jobs)
    logger.debug('Explained %d rows with the Gaussian observational engine', X.shape[0])
    return ExplanationMatrix(values, model.intercept + np.dot(model.coefficients, spec.mean),
                             ExplanationMethod.GAUSSIAN_OBSERVATIONAL)
