"""A module to map pure functions over row chunks, optionally in parallel.

Chunk boundaries depend only on the row count and chunk size, never on
the number of jobs, so parallel and sequential runs produce identical
arrays.
"""
import numpy as np
from joblib import Parallel, delayed

DEFAULT_CHUNK_ROWS = 2048


def chunk_bounds(num_rows, chunk_rows=DEFAULT_CHUNK_ROWS):
    """Returns the (start, stop) pairs splitting num_rows into fixed-size chunks."""
    assert chunk_rows > 0, 'Chunk size must be positive'
    return [(start, min(start + chunk_rows, num_rows))
            for start in range(0, num_rows, chunk_rows)]


def parallel_map(func, items, n_jobs=1):
    """Applies func to every item and returns the results in item order.

    Args:
        func (callable): Pure function of one argument.
        items (list): Arguments.
        n_jobs (int): Worker threads; 1 runs in the calling thread.

    Returns:
        A list of results.
    """
    if n_jobs == 1 or len(items) <= 1:
        return [func(item) for item in items]
    return Parallel(n_jobs=n_jobs, prefer='threads')(delayed(func)(item) for item in items)


def map_row_chunks(func, X, n_jobs=1, chunk_rows=DEFAULT_CHUNK_ROWS):
    """Applies a row-wise function chunk by chunk and stacks the results.

    Args:
        func (callable): Maps an m x p block of rows to an m x k block.
        X (2-D array): Rows to process.
        n_jobs (int): Worker threads.
        chunk_rows (int): Rows per chunk.

    Returns:
        The vertically stacked results.
    """
    blocks = [X[start:stop] for start, stop in chunk_bounds(X.shape[0], chunk_rows)]
    return np.vstack(parallel_map(func, blocks, n_jobs))
