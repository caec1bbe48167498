"""A module for the one-dimensional Wasserstein-1 distance."""
import numpy as np

from xshift.stats.result import DistanceMethod, TestResult
from xshift.util.matrix_operations import as_vector


def wasserstein_1d(a, b):
    """Computes W1 = integral of |F_a(x) - F_b(x)| dx between two samples.

    Samples of equal size are matched in sorted order, which gives the same
    value as the CDF integral.

    Args:
        a (array-like): First sample.
        b (array-like): Second sample.

    Returns:
        A TestResult holding the distance (no p-value).

    Raises:
        EmptyInputError: If a sample is empty or not finite.
    """
    a = np.sort(as_vector(a, name='a'))
    b = np.sort(as_vector(b, name='b'))
    if a.size == b.size:
        distance = float(np.mean(np.abs(a - b)))
    else:
        pooled = np.sort(np.concatenate([a, b]))
        widths = np.diff(pooled)
        cdf_a = np.searchsorted(a, pooled[:-1], side='right') / a.size
        cdf_b = np.searchsorted(b, pooled[:-1], side='right') / b.size
        distance = float(np.sum(np.abs(cdf_a - cdf_b) * widths))
    return TestResult(distance, None, DistanceMethod.WASSERSTEIN1, a.size, b.size)
