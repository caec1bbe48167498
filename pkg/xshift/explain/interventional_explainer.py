"""A module to explain any model with interventional Shapley values.

The value of a coalition T for a row x is the mean prediction over the
background rows b with the features in T replaced by x_T, minus the mean
prediction over the background. All coalitions are enumerated exactly.

Three evaluators compute this same value function:
  - linear models: the mean over b of f(x_T, b) is f(x_T, mean b);
  - tree ensembles: each leaf contributes its value times the indicator
    that x_T lies in the leaf box times the share of background rows whose
    remaining features lie in the box;
  - anything else: background compositions are built and predicted.
"""
import logging

import numpy as np

from xshift.explain.background_set import BackgroundSet
from xshift.explain.explanation_matrix import ExplanationMatrix, ExplanationMethod
from xshift.models.gbdt_model import GbdtModel
from xshift.models.linear_model import LinearModel
from xshift.util.combinatorics import coalition_members, combine_coalition_values
from xshift.util.errors import CostGuardError
from xshift.util.matrix_operations import as_matrix, check_num_columns
from xshift.util.parallel import map_row_chunks

logger = logging.getLogger(__name__)

MAX_INTERVENTIONAL_FEATURES = 15
# Upper bound on rows x background compositions predicted at once.
MAX_COMPOSITIONS = 1 << 20


class _LinearValues:

    def __init__(self, model, background):
        self.model = model
        self.means = background.means
        self.expected_value = float(np.mean(model.predict(background.rows)))

    def __call__(self, rows, num_features):
        values = np.empty((rows.shape[0], 1 << num_features))
        for mask in range(1 << num_features):
            members = coalition_members(mask, num_features)
            composed = np.tile(self.means, (rows.shape[0], 1))
            composed[:, members] = rows[:, members]
            values[:, mask] = self.model.predict(composed) - self.expected_value
        return values


class _TreeValues:

    def __init__(self, model, background):
        self.lower, self.upper, self.leaf_values = model.leaf_boxes()
        self.base_score = model.base_score
        num_features = model.num_features
        inside = self._inside(background.rows)
        # Share of background rows inside each leaf box on the features outside T.
        self.weighted = np.empty((1 << num_features, self.leaf_values.size))
        full = (1 << num_features) - 1
        for mask in range(1 << num_features):
            outside = coalition_members(full ^ mask, num_features)
            share = np.all(inside[:, :, outside], axis=2).mean(axis=0)
            self.weighted[mask] = self.leaf_values * share
        self.expected_value = self.base_score + float(self.weighted[0].sum())

    def _inside(self, rows):
        expanded = rows[:, np.newaxis, :]
        return (self.lower[np.newaxis] < expanded) & (expanded <= self.upper[np.newaxis])

    def __call__(self, rows, num_features):
        inside = self._inside(rows)
        values = np.empty((rows.shape[0], 1 << num_features))
        for mask in range(1 << num_features):
            in_box = np.all(inside[:, :, coalition_members(mask, num_features)], axis=2)
            values[:, mask] = (self.base_score + in_box @ self.weighted[mask]
                               - self.expected_value)
        return values


class _CompositionValues:

    def __init__(self, model, background):
        self.model = model
        self.background = background.rows
        self.expected_value = float(np.mean(model.predict(self.background)))

    def __call__(self, rows, num_features):
        num_background = self.background.shape[0]
        step = max(1, MAX_COMPOSITIONS // num_background)
        values = np.empty((rows.shape[0], 1 << num_features))
        for start in range(0, rows.shape[0], step):
            block = rows[start:start + step]
            for mask in range(1 << num_features):
                members = coalition_members(mask, num_features)
                composed = np.tile(self.background, (block.shape[0], 1))
                composed[:, members] = np.repeat(block[:, members], num_background, axis=0)
                predictions = self.model.predict(composed).reshape(block.shape[0],
                                                                   num_background)
                values[start:start + step, mask] = predictions.mean(axis=1) - self.expected_value
        return values


def _value_function(model, background):
    if isinstance(model, LinearModel):
        return _LinearValues(model, background)
    if isinstance(model, GbdtModel):
        return _TreeValues(model, background)
    return _CompositionValues(model, background)


def shap_interventional(model, X, background, n_jobs=1, brute_force=False):
    """Computes exact interventional Shapley values by coalition enumeration.

    Args:
        model: LinearModel, GbdtModel, or any object with predict(X).
        X (2-D array-like): Rows to explain.
        background (BackgroundSet): Reference rows for marginal expectations.
        n_jobs (int): Worker threads for the row map.
        brute_force (bool): Always predict explicit background compositions,
            bypassing the linear and tree evaluators.

    Returns:
        An ExplanationMatrix with expected value mean_b f(b).

    Raises:
        CostGuardError: If there are more than 15 features.
    """
    assert isinstance(background, BackgroundSet)
    X = as_matrix(X)
    p = X.shape[1]
    check_num_columns(X, background.num_features)
    if p > MAX_INTERVENTIONAL_FEATURES:
        raise CostGuardError('Interventional enumeration costs 2^p * |background| model calls '
                             'per row and is limited to %d features, got %d; subsample the '
                             'features to explain' % (MAX_INTERVENTIONAL_FEATURES, p))

    if brute_force:
        value_function = _CompositionValues(model, background)
    else:
        value_function = _value_function(model, background)
    values = map_row_chunks(
        lambda rows: combine_coalition_values(value_function(rows, p), p), X, n_jobs)
    logger.debug('Explained %d rows with %s over %d background rows', X.shape[0],
                 type(value_function).__name__, background.size)
    return ExplanationMatrix(values, value_function.expected_value,
                             ExplanationMethod.INTERVENTIONAL_ENUMERATION)
