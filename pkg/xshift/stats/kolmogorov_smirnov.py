"""A module for the two-sample Kolmogorov-Smirnov test."""
import math

import numpy as np
from scipy.special import kolmogorov

from xshift.stats.result import DistanceMethod, TestResult
from xshift.util.errors import EmptyInputError
from xshift.util.matrix_operations import as_vector


def ks_statistic(a, b):
    """Computes D = sup_x |F_a(x) - F_b(x)| exactly.

    Both empirical CDFs are evaluated at every pooled sample point, which
    covers all jumps including ties.

    Args:
        a (array): First sample, sorted ascending.
        b (array): Second sample, sorted ascending.

    Returns:
        The KS statistic in [0, 1].
    """
    pooled = np.concatenate([a, b])
    cdf_a = np.searchsorted(a, pooled, side='right') / a.size
    cdf_b = np.searchsorted(b, pooled, side='right') / b.size
    return float(np.max(np.abs(cdf_a - cdf_b)))


def ks_p_value(statistic, n_a, n_b):
    """Computes the asymptotic two-sample KS tail probability P(D >= d).

    The Kolmogorov survival function Q(lambda) = 2 sum_k (-1)^(k-1)
    exp(-2 k^2 lambda^2) is evaluated at
    lambda = D (sqrt(n_e) + 0.12 + 0.11 / sqrt(n_e)), n_e = n_a n_b / (n_a + n_b).

    Returns:
        The p-value clamped to [0, 1].
    """
    effective = n_a * n_b / (n_a + n_b)
    root = math.sqrt(effective)
    lam = statistic * (root + 0.12 + 0.11 / root)
    return float(min(1.0, max(0.0, kolmogorov(lam))))


def ks_two_sample(a, b):
    """Runs the two-sample Kolmogorov-Smirnov test.

    Args:
        a (array-like): First sample, at least 2 finite values.
        b (array-like): Second sample, at least 2 finite values.

    Returns:
        A TestResult with the KS statistic and asymptotic p-value.

    Raises:
        EmptyInputError: If a sample is too small or not finite.
    """
    a = np.sort(as_vector(a, name='a'))
    b = np.sort(as_vector(b, name='b'))
    if a.size < 2 or b.size < 2:
        raise EmptyInputError('KS test needs at least 2 values per sample, got %d and %d'
                              % (a.size, b.size))
    statistic = ks_statistic(a, b)
    return TestResult(statistic, ks_p_value(statistic, a.size, b.size), DistanceMethod.KS,
                      a.size, b.size)
