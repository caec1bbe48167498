"""A module to keep track of two-sample comparison results."""
import dataclasses
import enum
from typing import Optional

from xshift.util.errors import ConfigurationError


class DistanceMethod(enum.Enum):
    KS = 'KS'
    WASSERSTEIN1 = 'Wasserstein1'
    PSI = 'PSI'


DISTANCE_NAMES = {
    'ks': DistanceMethod.KS,
    'wasserstein': DistanceMethod.WASSERSTEIN1,
    'psi': DistanceMethod.PSI,
}


def distance_from_name(name):
    """Parses a CLI distance name ('ks', 'wasserstein', 'psi')."""
    try:
        return DISTANCE_NAMES[name]
    except KeyError:
        raise ConfigurationError('Unknown distance %r; expected one of %s'
                                 % (name, ', '.join(sorted(DISTANCE_NAMES))))


@dataclasses.dataclass(frozen=True)
class TestResult:

    """Outcome of comparing two samples.

    Attributes:
        statistic (float): Test statistic or distance, nonnegative.
        p_value (float): Tail probability, present only for KS.
        method (DistanceMethod): Comparison used.
        n_a (int): Size of the first sample.
        n_b (int): Size of the second sample.
    """

    __test__ = False

    statistic: float
    p_value: Optional[float]
    method: DistanceMethod
    n_a: int
    n_b: int

    def __post_init__(self):
        assert self.statistic >= 0, 'Statistic must be nonnegative, got %r' % self.statistic
        assert (self.p_value is not None) == (self.method == DistanceMethod.KS), \
            'p_value must be present exactly for KS results'
        if self.method == DistanceMethod.KS:
            assert self.statistic <= 1 and 0 <= self.p_value <= 1

    def to_dict(self):
        return {'statistic': self.statistic, 'p_value': self.p_value,
                'method': self.method.value, 'n_a': self.n_a, 'n_b': self.n_b}


@dataclasses.dataclass(frozen=True)
class FeatureComparison:

    """Comparison of one feature column between two matrices.

    Attributes:
        feature_index (int): Column compared.
        result (TestResult): Comparison outcome.
        distinct (bool): p_value < alpha for KS, None for distances.
    """

    feature_index: int
    result: TestResult
    distinct: Optional[bool]
