"""A module to draw seeded samples from multivariate normal distributions."""
from xshift.synth.gaussian_spec import GaussianSpec
from xshift.util.random_sample import sample_standard_normal


def sample_mvn(spec, n, seed):
    """Samples n rows from a multivariate normal distribution.

    Rows are mean + L z, where L is the lower Cholesky factor of the
    covariance and z is a vector of standard normals drawn by inverse-CDF
    transform, so the same (spec, n, seed) always gives the same matrix.

    Args:
        spec (GaussianSpec): Distribution to sample from.
        n (int): Number of rows.
        seed (int): 64-bit unsigned seed.

    Returns:
        An n x p float64 matrix.
    """
    assert isinstance(spec, GaussianSpec)
    if n < 1:
        raise ValueError('Sample count must be positive, got %d' % n)
    z = sample_standard_normal(seed, (n, spec.dimension))
    return spec.mean + z @ spec.cholesky.T
