"""A module to sample reproducibly from seeded random streams.

Every stream is a numpy Generator over the PCG64 bit generator, which
produces the same sequence on every platform. Streams are split by
hashing the parent seed together with a label, so a child stream never
depends on how many draws were taken from its parent.
"""
import hashlib

import numpy as np
from scipy.special import ndtri

MAX_SEED = (1 << 64) - 1
_MANTISSA = float(1 << 53)


def check_seed(seed):
    """Validates a 64-bit unsigned seed.

    Args:
        seed (int): Candidate seed.

    Returns:
        The seed as an int.

    Raises:
        ValueError: If the seed is negative or wider than 64 bits.
    """
    seed = int(seed)
    if seed < 0 or seed > MAX_SEED:
        raise ValueError('Seed %d is not a 64-bit unsigned integer' % seed)
    return seed


def derive_seed(parent_seed, label):
    """Derives a child seed from a parent seed and a stream label.

    The child seed is the first 8 bytes (little endian) of
    SHA-256("<parent_seed>/<label>").

    Args:
        parent_seed (int): 64-bit unsigned parent seed.
        label (str or int): Name of the child stream.

    Returns:
        A 64-bit unsigned child seed.
    """
    parent_seed = check_seed(parent_seed)
    digest = hashlib.sha256(('%d/%s' % (parent_seed, label)).encode('utf-8')).digest()
    return int.from_bytes(digest[:8], 'little')


def make_generator(seed):
    """Creates a deterministic generator for the given seed.

    Args:
        seed (int): 64-bit unsigned seed.

    Returns:
        A numpy Generator backed by PCG64.
    """
    return np.random.Generator(np.random.PCG64(check_seed(seed)))


def sample_open_uniform(seed, size):
    """Samples uniform values from the open interval (0, 1).

    Each value is (k + 0.5) / 2^53 for an integer k drawn uniformly from
    [0, 2^53), so neither endpoint is ever produced.

    Args:
        seed (int): Seed of the stream.
        size (int or tuple): Output shape.

    Returns:
        An array of uniform values.
    """
    rng = make_generator(seed)
    k = rng.integers(0, 1 << 53, size=size, dtype=np.int64)
    return (k.astype(np.float64) + 0.5) / _MANTISSA


def sample_standard_normal(seed, size):
    """Samples standard normal values by inverse-CDF transform.

    Exactly one uniform draw is consumed per output value.

    Args:
        seed (int): Seed of the stream.
        size (int or tuple): Output shape.

    Returns:
        An array of standard normal values.
    """
    return ndtri(sample_open_uniform(seed, size))


def sample_indices(seed, population, count):
    """Samples row indices uniformly with replacement.

    Args:
        seed (int): Seed of the stream.
        population (int): Number of rows to draw from.
        count (int): Number of indices to draw.

    Returns:
        An int64 array of indices in [0, population).
    """
    if population < 1:
        raise ValueError('Cannot sample from an empty population')
    return make_generator(seed).integers(0, population, size=count, dtype=np.int64)


def sample_subset(seed, population, count):
    """Samples distinct row indices uniformly, returned in ascending order.

    Args:
        seed (int): Seed of the stream.
        population (int): Number of rows to draw from.
        count (int): Number of indices to keep; capped at population.

    Returns:
        A sorted int64 array of distinct indices.
    """
    if count >= population:
        return np.arange(population, dtype=np.int64)
    chosen = make_generator(seed).permutation(population)[:count]
    return np.sort(chosen).astype(np.int64)
