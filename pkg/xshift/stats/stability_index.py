"""A module for the Population Stability Index."""
import numpy as np

from xshift.stats.result import DistanceMethod, TestResult
from xshift.util.errors import DegenerateInputError
from xshift.util.matrix_operations import as_vector

DEFAULT_BINS = 10
PROPORTION_FLOOR = 1e-4


def _proportions(values, edges, bins):
    counts = np.bincount(np.searchsorted(edges, values, side='left'), minlength=bins)
    shares = np.maximum(counts / values.size, PROPORTION_FLOOR)
    return shares / shares.sum()


def psi(a, b, bins=DEFAULT_BINS):
    """Computes the Population Stability Index of b against reference a.

    Bin edges are the k / bins quantiles of a (outer edges at +-inf). Bin
    proportions of both samples are floored at 1e-4 and renormalized
    before PSI = sum_k (p_k - q_k) ln(p_k / q_k).

    Args:
        a (array-like): Reference sample, at least bins values.
        b (array-like): Comparison sample.
        bins (int): Number of quantile bins.

    Returns:
        A TestResult holding the index (no p-value).

    Raises:
        DegenerateInputError: If a is constant or shorter than bins.
    """
    a = as_vector(a, name='a')
    b = as_vector(b, name='b')
    if bins < 1:
        raise ValueError('bins must be positive, got %d' % bins)
    if a.size < bins:
        raise DegenerateInputError('PSI with %d bins needs at least %d reference values, got %d'
                                   % (bins, bins, a.size))
    if np.all(a == a[0]):
        raise DegenerateInputError('Reference sample is constant; all values fall in one bin')
    edges = np.quantile(a, np.arange(1, bins) / bins)
    p = _proportions(a, edges, bins)
    q = _proportions(b, edges, bins)
    value = float(np.sum((p - q) * np.log(p / q)))
    return TestResult(max(value, 0.0), None, DistanceMethod.PSI, a.size, b.size)
