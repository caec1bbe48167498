"""A module to keep track of a multivariate normal feature distribution."""
import numpy as np

from xshift.util.errors import ConfigurationError
from xshift.util.matrix_operations import cholesky_lower, is_symmetric


class GaussianSpec:

    """A multivariate normal distribution N(mean, covariance).

    The Cholesky factor is computed once at construction, so an instance
    that exists is always a valid, positive definite distribution.

    Attributes:
        mean (array): Mean vector of length p.
        covariance (2-D array): p x p covariance matrix.
        cholesky (2-D array): Lower triangular factor L with covariance = L L^T.
    """

    def __init__(self, mean, covariance):
        """Inits GaussianSpec and validates it.

        Args:
            mean (array-like): Mean vector.
            covariance (array-like): Covariance matrix.

        Raises:
            ConfigurationError: If the covariance is not square, does not
                match the mean, or is not symmetric.
            FactorizationError: If the covariance is not positive definite.
        """
        self.mean = np.array(mean, dtype=np.float64).reshape(-1)
        self.covariance = np.array(covariance, dtype=np.float64)
        self.covariance.setflags(write=False)
        self.mean.setflags(write=False)

        if self.covariance.ndim != 2 or self.covariance.shape[0] != self.covariance.shape[1]:
            raise ConfigurationError('Covariance must be square, got shape %s'
                                     % (self.covariance.shape,))
        if self.covariance.shape[0] != self.mean.size:
            raise ConfigurationError('Covariance dimension %d does not match mean length %d'
                                     % (self.covariance.shape[0], self.mean.size))
        if not is_symmetric(self.covariance):
            raise ConfigurationError('Covariance matrix is not symmetric')
        self.cholesky = cholesky_lower(self.covariance)

    @property
    def dimension(self):
        """Number of features p."""
        return self.mean.size

    @classmethod
    def standard(cls, dimension, mean=0.0, variance=1.0):
        """Creates an isotropic spec N(mean * 1, variance * I)."""
        return cls(np.full(dimension, float(mean)), variance * np.eye(dimension))

    @classmethod
    def bivariate(cls, mean1, mean2, sd1, sd2, rho):
        """Creates a bivariate spec from means, standard deviations and correlation."""
        cov = rho * sd1 * sd2
        return cls([mean1, mean2], [[sd1 ** 2, cov], [cov, sd2 ** 2]])

    def is_diagonal(self):
        """Checks whether all off-diagonal covariances are zero."""
        return bool(np.all(self.covariance == np.diag(np.diag(self.covariance))))

    def to_dict(self):
        """Returns a JSON-ready description of the distribution."""
        return {'mean': self.mean.tolist(), 'covariance': self.covariance.tolist()}

    def __eq__(self, other):
        if not isinstance(other, GaussianSpec):
            return NotImplemented
        return (np.array_equal(self.mean, other.mean)
                and np.array_equal(self.covariance, other.covariance))

    def __hash__(self):
        return hash((self.mean.tobytes(), self.covariance.tobytes()))

    def __str__(self):
        return 'N(mean=%s, cov=%s)' % (self.mean.tolist(), self.covariance.tolist())
