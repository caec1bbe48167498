"""A helper module for test functions.
"""
import itertools
import math

import numpy as np


def check_matrix_approx_eq(mat1, mat2, error=1e-10,
                           error_message="Error: matrices are not approximately equal."):
    """Checks whether two real matrices are approximately equal.

    Checks that each entry of two arrays of the same shape is within the
    given absolute error.

    Args:
        mat1 (array-like): Matrix 1.
        mat2 (array-like): Matrix 2.
        error (float): How close each entry of the two matrices must be.
        error_message (String): Message to output if not equal.
    """
    mat1 = np.asarray(mat1, dtype=np.float64)
    mat2 = np.asarray(mat2, dtype=np.float64)
    assert mat1.shape == mat2.shape, 'Shape of m1 = %s, shape of m2 = %s' % (mat1.shape,
                                                                             mat2.shape)
    diff = np.abs(mat1 - mat2)
    if diff.size and np.max(diff) > error:
        index = np.unravel_index(np.argmax(diff), diff.shape)
        print("-------- VALUES DO NOT MATCH AT INDEX %s --------" % (index,))
        print(str(mat1[index]) + " != " + str(mat2[index]))
        print("m1: " + str(mat1.reshape(-1)[:10]))
        print("m2: " + str(mat2.reshape(-1)[:10]))
        raise ValueError(error_message)


def permutation_shapley(value, num_players):
    """Computes Shapley values by averaging marginal contributions over all orderings.

    Args:
        value (callable): Maps a frozenset of players to the coalition value.
        num_players (int): Number of players.

    Returns:
        A list with the Shapley value of every player.
    """
    totals = [0.0] * num_players
    orderings = list(itertools.permutations(range(num_players)))
    for ordering in orderings:
        coalition = frozenset()
        before = value(coalition)
        for player in ordering:
            coalition = coalition | {player}
            after = value(coalition)
            totals[player] += after - before
            before = after
    return [total / math.factorial(num_players) for total in totals]


def interventional_value(predict, x, background, coalition):
    """Returns E_b[f(x_T, b_rest)] for a coalition T over explicit background rows."""
    composed = np.array(background, dtype=np.float64, copy=True)
    members = sorted(coalition)
    composed[:, members] = np.asarray(x, dtype=np.float64)[members]
    return float(np.mean(predict(composed)))
