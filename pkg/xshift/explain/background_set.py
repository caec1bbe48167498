"""A module to keep track of the reference sample of interventional explanations."""
import logging

import numpy as np

from xshift.util.matrix_operations import as_matrix, column_means
from xshift.util.random_sample import sample_subset

logger = logging.getLogger(__name__)

DEFAULT_BACKGROUND_CAP = 2000


class BackgroundSet:

    """A reference sample that defines marginal expectations.

    Attributes:
        rows (2-D array): Background rows.
        means (array): Column means of rows.
        source_rows (int): Row count of the data the background was drawn from.
        seed (int): Seed of the subsample, None when no subsampling happened.
    """

    def __init__(self, rows, source_rows=None, seed=None):
        self.rows = as_matrix(rows, name='background')
        self.rows.setflags(write=False)
        self.means = column_means(self.rows)
        self.source_rows = self.rows.shape[0] if source_rows is None else int(source_rows)
        self.seed = seed

    @classmethod
    def from_data(cls, X, cap=DEFAULT_BACKGROUND_CAP, seed=0):
        """Builds a background from data, subsampling uniformly down to cap rows.

        Args:
            X (2-D array-like): Source data, usually the training matrix.
            cap (int): Maximum number of background rows; None keeps all rows.
            seed (int): Seed of the subsample.

        Returns:
            A BackgroundSet.
        """
        X = as_matrix(X, name='background source')
        if cap is None or X.shape[0] <= cap:
            return cls(X)
        chosen = sample_subset(seed, X.shape[0], cap)
        logger.info('Capped background from %d to %d rows', X.shape[0], cap)
        return cls(X[chosen], source_rows=X.shape[0], seed=seed)

    @property
    def size(self):
        return self.rows.shape[0]

    @property
    def num_features(self):
        return self.rows.shape[1]

    def to_dict(self):
        return {'rows': self.size, 'source_rows': self.source_rows, 'seed': self.seed,
                'capped': self.size < self.source_rows}
