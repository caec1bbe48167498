"""A module to validate and factorize real matrices.
"""
import numpy as np
from scipy import linalg

from xshift.util.errors import (ConditionalExpectationError, DimensionMismatchError,
                                EmptyInputError, FactorizationError)

SYMMETRY_TOLERANCE = 1e-12


def as_matrix(data, name='X'):
    """Converts array-like data to a 2-D float64 matrix.

    A 1-D input is read as a single column.

    Args:
        data (array-like): Rows of feature vectors.
        name (str): Name used in error messages.

    Returns:
        A 2-D float64 numpy array.

    Raises:
        EmptyInputError: If the matrix has no rows or holds NaN/inf.
    """
    mat = np.asarray(data, dtype=np.float64)
    if mat.ndim == 1:
        mat = mat.reshape(-1, 1)
    if mat.ndim != 2:
        raise DimensionMismatchError('%s must be 2-D, got %d dimensions' % (name, mat.ndim))
    if mat.shape[0] == 0 or mat.shape[1] == 0:
        raise EmptyInputError('%s is empty (shape %s)' % (name, mat.shape))
    if not np.all(np.isfinite(mat)):
        raise EmptyInputError('%s contains NaN or infinite values' % name)
    return mat


def as_vector(data, name='y'):
    """Converts array-like data to a 1-D float64 vector.

    Args:
        data (array-like): Values.
        name (str): Name used in error messages.

    Returns:
        A 1-D float64 numpy array.

    Raises:
        EmptyInputError: If the vector is empty or holds NaN/inf.
    """
    vec = np.asarray(data, dtype=np.float64).reshape(-1)
    if vec.size == 0:
        raise EmptyInputError('%s is empty' % name)
    if not np.all(np.isfinite(vec)):
        raise EmptyInputError('%s contains NaN or infinite values' % name)
    return vec


def check_num_columns(mat, expected, name='X'):
    """Raises DimensionMismatchError unless mat has the expected column count."""
    if mat.shape[1] != expected:
        raise DimensionMismatchError('%s has %d columns, expected %d'
                                     % (name, mat.shape[1], expected))


def column_means(mat):
    """Returns the per-column means of a matrix."""
    return np.mean(mat, axis=0)


def is_symmetric(mat, tolerance=SYMMETRY_TOLERANCE):
    """Checks that a square matrix equals its transpose within an absolute tolerance."""
    return mat.shape[0] == mat.shape[1] and bool(np.all(np.abs(mat - mat.T) <= tolerance))


def cholesky_lower(cov):
    """Computes the lower Cholesky factor L with cov = L L^T.

    Args:
        cov (2-D array): Symmetric positive definite matrix.

    Returns:
        The lower triangular factor.

    Raises:
        FactorizationError: If cov is not positive definite.
    """
    try:
        return linalg.cholesky(cov, lower=True)
    except linalg.LinAlgError as err:
        raise FactorizationError('Covariance matrix is not positive definite: %s' % err)


def conditional_mean(mean, cov, given, points):
    """Computes E[X | X_given = x_given] for a multivariate normal X.

    Uses mu_rest + Sigma_{rest,given} Sigma_{given,given}^{-1} (x_given - mu_given)
    for the remaining coordinates; the given coordinates are copied from the
    points.

    Args:
        mean (1-D array): Mean vector of length p.
        cov (2-D array): p x p covariance.
        given (list (int)): Indices of the observed coordinates.
        points (2-D array): n x p matrix; only the given columns are read.

    Returns:
        An n x p matrix of conditional expectations.

    Raises:
        ConditionalExpectationError: If Sigma_{given,given} is singular.
    """
    num_rows = points.shape[0]
    out = np.tile(mean, (num_rows, 1))
    if not given:
        return out
    given = list(given)
    rest = [j for j in range(len(mean)) if j not in given]
    out[:, given] = points[:, given]
    if not rest:
        return out

    sigma_gg = cov[np.ix_(given, given)]
    sigma_rg = cov[np.ix_(rest, given)]
    try:
        factor = linalg.cho_factor(sigma_gg, lower=True)
    except linalg.LinAlgError:
        raise ConditionalExpectationError('Covariance block for features %s is singular'
                                          % given)
    centered = points[:, given] - mean[given]
    out[:, rest] = mean[rest] + linalg.cho_solve(factor, centered.T).T @ sigma_rg.T
    return out
