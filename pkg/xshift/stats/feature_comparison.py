"""A module to compare two matrices column by column."""
import numpy as np

from xshift.stats.kolmogorov_smirnov import ks_two_sample
from xshift.stats.result import DistanceMethod, FeatureComparison
from xshift.stats.stability_index import DEFAULT_BINS, psi
from xshift.stats.wasserstein import wasserstein_1d
from xshift.util.errors import DimensionMismatchError
from xshift.util.matrix_operations import as_matrix


def distance(method, a, b, bins=DEFAULT_BINS):
    """Compares two samples with the given method.

    Args:
        method (DistanceMethod): KS, Wasserstein1 or PSI.
        a (array-like): Reference sample.
        b (array-like): Comparison sample.
        bins (int): Bin count for PSI.

    Returns:
        A TestResult.
    """
    method = DistanceMethod(method)
    if method == DistanceMethod.KS:
        return ks_two_sample(a, b)
    if method == DistanceMethod.WASSERSTEIN1:
        return wasserstein_1d(a, b)
    return psi(a, b, bins)


def per_feature_compare(A, B, method=DistanceMethod.KS, alpha=0.05, bins=DEFAULT_BINS):
    """Compares every column of A with the same column of B.

    Args:
        A (2-D array-like): Reference matrix.
        B (2-D array-like): Comparison matrix.
        method (DistanceMethod): Comparison to apply.
        alpha (float): Significance level for KS verdicts.
        bins (int): Bin count for PSI.

    Returns:
        A list of FeatureComparison, one per column.

    Raises:
        DimensionMismatchError: If the column counts differ.
    """
    A = as_matrix(A, name='A')
    B = as_matrix(B, name='B')
    if A.shape[1] != B.shape[1]:
        raise DimensionMismatchError('Cannot compare %d columns with %d columns'
                                     % (A.shape[1], B.shape[1]))
    method = DistanceMethod(method)
    comparisons = []
    for j in range(A.shape[1]):
        result = distance(method, A[:, j], B[:, j], bins)
        distinct = bool(result.p_value < alpha) if method == DistanceMethod.KS else None
        comparisons.append(FeatureComparison(j, result, distinct))
    return comparisons


def count_distinct(comparisons):
    """Counts the comparisons with a Distinct verdict."""
    return sum(1 for comparison in comparisons if comparison.distinct)


def distance_vector(A, B, method, bins=DEFAULT_BINS):
    """Returns the per-column statistics of per_feature_compare as an array."""
    return np.array([c.result.statistic for c in per_feature_compare(A, B, method, bins=bins)])
