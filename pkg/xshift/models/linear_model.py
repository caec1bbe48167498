"""A module to fit and evaluate linear regression models."""
import logging

import numpy as np
from scipy import linalg

from xshift.util.errors import SingularSystemError
from xshift.util.matrix_operations import as_matrix, as_vector, check_num_columns

logger = logging.getLogger(__name__)


class LinearModel:

    """A linear predictor f(x) = intercept + dot(coefficients, x).

    Attributes:
        intercept (float): Constant term.
        coefficients (array): One coefficient per feature.
        regularization (float): Ridge penalty used in fitting, 0 for OLS.
    """

    def __init__(self, intercept, coefficients, regularization=0.0):
        """Inits LinearModel.

        Args:
            intercept (float): Constant term.
            coefficients (array-like): Coefficient per feature.
            regularization (float): Ridge penalty used in fitting.
        """
        self.intercept = float(intercept)
        self.coefficients = np.array(coefficients, dtype=np.float64).reshape(-1)
        self.coefficients.setflags(write=False)
        self.regularization = float(regularization)

    @property
    def num_features(self):
        return self.coefficients.size

    def predict(self, X):
        """Predicts the target for every row of X.

        Args:
            X (2-D array-like): Feature matrix with num_features columns.

        Returns:
            A 1-D array of predictions.
        """
        X = as_matrix(X)
        check_num_columns(X, self.num_features)
        return self.intercept + X @ self.coefficients

    def to_dict(self):
        return {'type': 'linear', 'intercept': self.intercept,
                'coefficients': self.coefficients.tolist(),
                'regularization': self.regularization}

    def __add__(self, other):
        if not isinstance(other, LinearModel):
            return NotImplemented
        return LinearModel(self.intercept + other.intercept,
                           self.coefficients + other.coefficients)

    def __str__(self):
        return 'LinearModel(intercept=%r, coefficients=%s)' % (self.intercept,
                                                               self.coefficients.tolist())


def _design_matrix(X):
    return np.hstack([np.ones((X.shape[0], 1)), X])


def fit_ols(X, y):
    """Fits an ordinary least squares linear regression with intercept.

    The least-squares problem is solved through a QR factorization of the
    design matrix [1, X] rather than by inverting X^T X.

    Args:
        X (2-D array-like): n x p feature matrix.
        y (array-like): n targets.

    Returns:
        A fitted LinearModel.

    Raises:
        SingularSystemError: If there are fewer than p + 1 rows or the design
            matrix is numerically rank deficient.
    """
    X = as_matrix(X)
    y = as_vector(y)
    num_rows, num_cols = X.shape
    if num_rows != y.size:
        raise ValueError('X has %d rows but y has %d values' % (num_rows, y.size))
    if num_rows < num_cols + 1:
        raise SingularSystemError('Need at least %d rows to fit %d coefficients, got %d'
                                  % (num_cols + 1, num_cols + 1, num_rows), float('inf'))

    q, r = np.linalg.qr(_design_matrix(X))
    condition = np.linalg.cond(r)
    limit = 1.0 / (max(num_rows, num_cols + 1) * np.finfo(np.float64).eps)
    if not np.isfinite(condition) or condition > limit:
        raise SingularSystemError('Design matrix is rank deficient (condition estimate %.3g '
                                  'exceeds %.3g)' % (condition, limit), condition)

    beta = linalg.solve_triangular(r, q.T @ y, lower=False)
    return LinearModel(beta[0], beta[1:])


def fit_ridge(X, y, penalty):
    """Fits a ridge regression with an unpenalized intercept.

    Args:
        X (2-D array-like): n x p feature matrix.
        y (array-like): n targets.
        penalty (float): Ridge penalty lambda > 0.

    Returns:
        A fitted LinearModel with regularization set to penalty.
    """
    X = as_matrix(X)
    y = as_vector(y)
    assert penalty > 0, 'Ridge penalty must be positive'
    x_mean = X.mean(axis=0)
    y_mean = y.mean()
    centered = X - x_mean
    gram = centered.T @ centered + penalty * np.eye(X.shape[1])
    coefficients = linalg.solve(gram, centered.T @ (y - y_mean), assume_a='pos')
    return LinearModel(y_mean - x_mean @ coefficients, coefficients, regularization=penalty)
