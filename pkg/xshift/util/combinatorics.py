"""A module with exact combinatorics for Shapley value enumeration.

Coalitions of p players are encoded as bitmasks: bit j of the mask is set
when player j belongs to the coalition.
"""
import numpy as np
import sympy

MAX_EXACT_PLAYERS = 20


def shapley_weight(coalition_size, num_players):
    """Computes the exact Shapley coalition weight |T|!(p-|T|-1)!/p!.

    Args:
        coalition_size (int): Size |T| of the coalition not containing the player.
        num_players (int): Total number of players p.

    Returns:
        The weight as an exact sympy Rational.
    """
    assert 0 <= coalition_size < num_players, \
        'Coalition size %d out of range for %d players' % (coalition_size, num_players)
    return sympy.Rational(sympy.factorial(coalition_size)
                          * sympy.factorial(num_players - coalition_size - 1),
                          sympy.factorial(num_players))


def shapley_weights(num_players):
    """Returns float weights indexed by coalition size 0..p-1.

    Each weight is computed exactly and rounded once to float64.
    """
    return np.array([float(shapley_weight(size, num_players)) for size in range(num_players)])


def coalition_sizes(num_players):
    """Returns the popcount of every bitmask in [0, 2^p)."""
    masks = np.arange(1 << num_players)
    sizes = np.zeros(1 << num_players, dtype=np.int64)
    for j in range(num_players):
        sizes += (masks >> j) & 1
    return sizes


def coalition_members(mask, num_players):
    """Lists the players in a coalition bitmask, in ascending order."""
    return [j for j in range(num_players) if mask >> j & 1]


def combine_coalition_values(values, num_players):
    """Turns coalition values into Shapley values.

    Computes S_j = sum over T not containing j of
    |T|!(p-|T|-1)!/p! * (v(T + j) - v(T)) for every row.

    Args:
        values (2-D array): n x 2^p matrix; column m holds v(T) for the
            coalition with bitmask m.
        num_players (int): Number of players p.

    Returns:
        An n x p matrix of Shapley values.
    """
    assert values.shape[1] == 1 << num_players, \
        'Expected %d coalition columns, got %d' % (1 << num_players, values.shape[1])
    weights = shapley_weights(num_players)
    sizes = coalition_sizes(num_players)
    masks = np.arange(1 << num_players)
    out = np.empty((values.shape[0], num_players))
    for j in range(num_players):
        bit = 1 << j
        without = masks[(masks & bit) == 0]
        out[:, j] = (values[:, without | bit] - values[:, without]) @ weights[sizes[without]]
    return out
