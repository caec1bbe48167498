"""A module to train gradient-boosted regression tree ensembles.

Each boosting round fits a depth-limited regression tree to the current
residuals with exact greedy splits and adds it with shrinkage.
"""
import logging

import numpy as np

from xshift.models.tree_node import TreeNode
from xshift.util.errors import ConfigurationError
from xshift.util.matrix_operations import as_matrix, as_vector, check_num_columns

logger = logging.getLogger(__name__)


class GbdtParameters:

    """Hyperparameters of the boosted tree ensemble.

    Attributes:
        rounds (int): Number of boosting rounds (trees).
        max_depth (int): Maximum depth of each tree.
        learning_rate (float): Shrinkage applied to every tree, in (0, 1].
        min_samples_leaf (int): Minimum training rows in each leaf.
        split_penalty (float): A split is kept only when its loss reduction
            exceeds split_penalty * log(training rows) * node residual variance.
            Zero keeps every split with a positive reduction.
    """

    def __init__(self, rounds=100, max_depth=3, learning_rate=0.1, min_samples_leaf=20,
                 split_penalty=4.0):
        """Inits GbdtParameters and validates them.

        Raises:
            ConfigurationError: If a parameter is out of range.
        """
        self.rounds = int(rounds)
        self.max_depth = int(max_depth)
        self.learning_rate = float(learning_rate)
        self.min_samples_leaf = int(min_samples_leaf)
        self.split_penalty = float(split_penalty)
        if self.rounds < 0:
            raise ConfigurationError('rounds must be nonnegative, got %d' % self.rounds)
        if self.max_depth < 1:
            raise ConfigurationError('max_depth must be at least 1, got %d' % self.max_depth)
        if not 0.0 < self.learning_rate <= 1.0:
            raise ConfigurationError('learning_rate must be in (0, 1], got %g'
                                     % self.learning_rate)
        if self.min_samples_leaf < 1:
            raise ConfigurationError('min_samples_leaf must be positive, got %d'
                                     % self.min_samples_leaf)
        if not self.split_penalty >= 0.0:
            raise ConfigurationError('split_penalty must be nonnegative, got %g'
                                     % self.split_penalty)

    def to_dict(self):
        return {'rounds': self.rounds, 'max_depth': self.max_depth,
                'learning_rate': self.learning_rate, 'min_samples_leaf': self.min_samples_leaf,
                'split_penalty': self.split_penalty}

    def print_parameters(self):
        """Prints parameters.
        """
        print("Boosting parameters")
        print("\t rounds: %d" % (self.rounds))
        print("\t max depth: %d" % (self.max_depth))
        print("\t learning rate: %g" % (self.learning_rate))
        print("\t min samples per leaf: %d" % (self.min_samples_leaf))
        print("\t split penalty: %g" % (self.split_penalty))


class GbdtModel:

    """A trained boosted tree ensemble for squared-error regression.

    Attributes:
        base_score (float): Initial prediction, the training target mean.
        trees (list (TreeNode)): Tree roots in boosting order.
        learning_rate (float): Shrinkage of every tree.
        num_features (int): Feature count seen in training.
        params (GbdtParameters): Parameters used in training.
        training_loss (list (float)): Training MSE after 0, 1, ..., rounds trees.
    """

    def __init__(self, base_score, trees, learning_rate, num_features, params=None,
                 training_loss=None):
        self.base_score = float(base_score)
        self.trees = list(trees)
        self.learning_rate = float(learning_rate)
        self.num_features = int(num_features)
        self.params = params
        self.training_loss = list(training_loss or [])

    def predict(self, X):
        """Predicts base_score + learning_rate * sum of tree outputs for every row.

        Args:
            X (2-D array-like): Feature matrix with num_features columns.

        Returns:
            A 1-D array of predictions.
        """
        X = as_matrix(X)
        check_num_columns(X, self.num_features)
        total = np.zeros(X.shape[0])
        for tree in self.trees:
            total += tree.predict(X)
        return self.base_score + self.learning_rate * total

    def leaf_boxes(self):
        """Flattens the ensemble into axis-aligned leaf boxes.

        The model equals base_score + sum over leaves of value * 1[lower < x <= upper].

        Returns:
            A tuple (lower, upper, values): two L x p bound matrices and the L
            leaf values already scaled by the learning rate.
        """
        lowers, uppers, values = [], [], []
        for tree in self.trees:
            lower, upper, value = tree.boxes(self.num_features)
            lowers.append(lower)
            uppers.append(upper)
            values.append(self.learning_rate * value)
        if not lowers:
            empty = np.empty((0, self.num_features))
            return empty, empty.copy(), np.empty(0)
        return np.vstack(lowers), np.vstack(uppers), np.concatenate(values)

    def used_features(self):
        """Returns the sorted list of features any tree splits on."""
        used = set()
        for tree in self.trees:
            used |= tree.used_features()
        return sorted(used)

    def to_dict(self):
        return {'type': 'gbdt', 'base_score': self.base_score,
                'learning_rate': self.learning_rate, 'num_trees': len(self.trees),
                'params': self.params.to_dict() if self.params else None,
                'used_features': self.used_features()}


class _TreeBuilder:

    """Grows one regression tree on residuals with exact greedy splits.

    Features are presorted once per ensemble; each node recovers its rows
    in sorted order by filtering the presorted index with a membership mask.

    A split is kept only if it reduces the squared loss by more than
    split_penalty * log(n) times the node residual variance, n being the
    training rows. When no split of a node clears that bar, every feature is
    tried at its balanced split instead, and the best one is kept if a child
    then has a split that clears it. A product x1 * x2 has no single useful
    split at the root but passes the second test.
    """

    def __init__(self, X, sorted_index, params):
        self.X = X
        self.sorted_index = sorted_index
        self.max_depth = params.max_depth
        self.min_leaf = params.min_samples_leaf
        self.penalty = params.split_penalty * np.log(X.shape[0])

    def build(self, residual):
        """Builds a tree and returns it with its predictions on the training rows."""
        fitted = np.empty(self.X.shape[0])
        root = self._grow(np.ones(self.X.shape[0], dtype=bool), residual, 0, fitted)
        return root, fitted

    def _grow(self, mask, residual, depth, fitted):
        count = int(np.count_nonzero(mask))
        total = residual[mask].sum()
        split = None
        if depth < self.max_depth and count >= 2 * self.min_leaf:
            split = self._best_split(mask, residual, count, total)
            if split is None and depth + 1 < self.max_depth:
                split = self._lookahead_split(mask, residual, count, total)
        if split is None:
            value = total / count
            fitted[mask] = value
            return TreeNode(cover=count, leaf_value=value)

        _, feature, threshold = split
        goes_left = self.X[:, feature] <= threshold
        left = self._grow(mask & goes_left, residual, depth + 1, fitted)
        right = self._grow(mask & ~goes_left, residual, depth + 1, fitted)
        return TreeNode(cover=count, feature_index=feature, threshold=threshold, left=left,
                        right=right)

    def _min_gain(self, mask, residual, count, total):
        variance = float(np.mean(residual[mask] ** 2)) - (total / count) ** 2
        return self.penalty * max(variance, 0.0)

    def _scan(self, mask, residual, count, total, feature):
        """Returns the node's sorted feature values and the loss reduction of
        splitting after each of them, -inf where the split is not allowed."""
        order = self.sorted_index[:, feature]
        rows = order[mask[order]]
        values = self.X[rows, feature]
        left_counts = np.arange(1, count, dtype=np.float64)
        right_counts = count - left_counts
        left_sums = np.cumsum(residual[rows])[:-1]
        right_sums = total - left_sums
        gain = left_sums ** 2 / left_counts + right_sums ** 2 / right_counts - total * total / count
        valid = ((left_counts >= self.min_leaf) & (right_counts >= self.min_leaf)
                 & (values[:-1] < values[1:]))
        return values, np.where(valid, gain, -np.inf)

    @staticmethod
    def _threshold(values, k):
        low, high = values[k], values[k + 1]
        threshold = low + (high - low) / 2.0
        if threshold >= high:
            threshold = low
        return threshold

    def _best_split(self, mask, residual, count, total):
        # Ties go to the lowest feature index, then the lowest threshold.
        best_gain = self._min_gain(mask, residual, count, total)
        best = None
        for feature in range(self.X.shape[1]):
            values, gain = self._scan(mask, residual, count, total, feature)
            k = int(np.argmax(gain))
            if gain[k] > best_gain:
                best_gain = gain[k]
                best = (best_gain, feature, self._threshold(values, k))
        return best

    def _lookahead_split(self, mask, residual, count, total):
        best_score = 0.0
        best = None
        for feature in range(self.X.shape[1]):
            values, gain = self._scan(mask, residual, count, total, feature)
            allowed = np.flatnonzero(np.isfinite(gain))
            if allowed.size == 0:
                continue
            k = int(allowed[np.argmin(np.abs(allowed - (count // 2 - 1)))])
            threshold = self._threshold(values, k)
            goes_left = self.X[:, feature] <= threshold
            score = gain[k]
            found = False
            for child in (mask & goes_left, mask & ~goes_left):
                child_count = int(np.count_nonzero(child))
                if child_count < 2 * self.min_leaf:
                    continue
                child_split = self._best_split(child, residual, child_count,
                                               residual[child].sum())
                if child_split is not None:
                    score += child_split[0]
                    found = True
            if found and score > best_score:
                best_score = score
                best = (gain[k], feature, threshold)
        return best


def fit_gbdt(X, y, params=None):
    """Trains a boosted regression tree ensemble under squared error.

    Args:
        X (2-D array-like): n x p feature matrix.
        y (array-like): n targets.
        params (GbdtParameters): Hyperparameters; defaults when None.

    Returns:
        A trained GbdtModel.

    Raises:
        EmptyInputError: If there is no training data.
        ConfigurationError: If there are fewer than 2 * min_samples_leaf rows.
    """
    params = params or GbdtParameters()
    X = as_matrix(X)
    y = as_vector(y)
    if X.shape[0] != y.size:
        raise ValueError('X has %d rows but y has %d values' % (X.shape[0], y.size))
    if y.size < 2 * params.min_samples_leaf:
        raise ConfigurationError('Need at least %d rows for min_samples_leaf=%d, got %d'
                                 % (2 * params.min_samples_leaf, params.min_samples_leaf, y.size))

    base_score = y.mean()
    current = np.full(y.size, base_score)
    losses = [float(np.mean((y - current) ** 2))]
    builder = _TreeBuilder(X, np.argsort(X, axis=0, kind='stable'), params)
    trees = []
    for round_index in range(params.rounds):
        tree, fitted = builder.build(y - current)
        current = current + params.learning_rate * fitted
        trees.append(tree)
        losses.append(float(np.mean((y - current) ** 2)))
        logger.debug('Round %d: training MSE %.6g', round_index + 1, losses[-1])

    logger.info('Trained %d trees on %d rows, final training MSE %.6g', len(trees), y.size,
                losses[-1])
    return GbdtModel(base_score, trees, params.learning_rate, X.shape[1], params=params,
                     training_loss=losses)
