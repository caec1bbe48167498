"""A module to keep track of per-sample Shapley explanations."""
import enum

import numpy as np


class ExplanationMethod(enum.Enum):
    """Value function used to compute the Shapley values."""
    LINEAR_INDEPENDENT = 'LinearIndependent'
    GAUSSIAN_OBSERVATIONAL = 'GaussianObservational'
    INTERVENTIONAL_ENUMERATION = 'InterventionalEnumeration'


class ExplanationMatrix:

    """Shapley attributions for every row and feature of a data matrix.

    Attributes:
        values (2-D array): n x p matrix; values[i, j] is the attribution of
            feature j for row i.
        expected_value (float): Baseline E[f(X)] the attributions are measured
            against.
        method (ExplanationMethod): Engine that produced the values.
    """

    def __init__(self, values, expected_value, method):
        self.values = np.asarray(values, dtype=np.float64)
        self.expected_value = float(expected_value)
        self.method = ExplanationMethod(method)
        assert self.values.ndim == 2, 'Explanation values must be a matrix'

    @property
    def shape(self):
        return self.values.shape

    def column(self, feature):
        """Returns the attributions of one feature across all rows."""
        return self.values[:, feature]

    def reconstruct_predictions(self):
        """Returns expected_value + row sums, which equals f(x) by local accuracy."""
        return self.expected_value + self.values.sum(axis=1)

    def efficiency_gap(self, predictions):
        """Returns the largest |sum_j S_j(x) - (f(x) - expected_value)| over all rows."""
        gap = self.values.sum(axis=1) - (np.asarray(predictions) - self.expected_value)
        return float(np.max(np.abs(gap)))

    def __str__(self):
        return '%s explanation of shape %s (expected value %r)' % (
            self.method.value, self.values.shape, self.expected_value)


def reconstruct_predictions(explanation):
    """Recovers model predictions from an explanation: E[f(X)] + sum_j S_j(x)."""
    return explanation.reconstruct_predictions()
