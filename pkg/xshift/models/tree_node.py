"""A module to keep track of a node of a regression tree."""
import numpy as np


class TreeNode:

    """A node of a binary regression tree.

    Internal nodes send a row left when x[feature_index] <= threshold and
    right otherwise. Leaves carry the predicted value.

    Attributes:
        feature_index (int): Split feature, None for leaves.
        threshold (float): Split threshold, None for leaves.
        left (TreeNode): Child for x[feature_index] <= threshold.
        right (TreeNode): Child for x[feature_index] > threshold.
        leaf_value (float): Value predicted by a leaf, None for internal nodes.
        cover (float): Number of training rows reaching the node.
    """

    def __init__(self, cover, leaf_value=None, feature_index=None, threshold=None, left=None,
                 right=None):
        self.cover = float(cover)
        self.leaf_value = None if leaf_value is None else float(leaf_value)
        self.feature_index = feature_index
        self.threshold = None if threshold is None else float(threshold)
        self.left = left
        self.right = right
        assert (left is None) == (right is None), 'A node needs both children or none'
        assert self.is_leaf or cover == left.cover + right.cover, \
            'Cover %g does not equal children covers %g + %g' % (cover, left.cover, right.cover)

    @property
    def is_leaf(self):
        return self.left is None

    def predict(self, X):
        """Predicts the value of every row of X.

        Args:
            X (2-D array): Feature matrix.

        Returns:
            A 1-D array with the leaf value reached by each row.
        """
        out = np.empty(X.shape[0])
        self._predict_rows(X, np.arange(X.shape[0]), out)
        return out

    def _predict_rows(self, X, rows, out):
        if self.is_leaf:
            out[rows] = self.leaf_value
            return
        goes_left = X[rows, self.feature_index] <= self.threshold
        self.left._predict_rows(X, rows[goes_left], out)
        self.right._predict_rows(X, rows[~goes_left], out)

    def boxes(self, num_features):
        """Returns (lower, upper, values) arrays describing all leaf boxes."""
        lower0 = np.full(num_features, -np.inf)
        upper0 = np.full(num_features, np.inf)
        lowers, uppers, values = [], [], []
        stack = [(self, lower0, upper0)]
        while stack:
            node, lower, upper = stack.pop()
            if node.is_leaf:
                lowers.append(lower)
                uppers.append(upper)
                values.append(node.leaf_value)
                continue
            j = node.feature_index
            left_upper = upper.copy()
            left_upper[j] = min(upper[j], node.threshold)
            right_lower = lower.copy()
            right_lower[j] = max(lower[j], node.threshold)
            stack.append((node.right, right_lower, upper))
            stack.append((node.left, lower, left_upper))
        return np.array(lowers), np.array(uppers), np.array(values)

    def depth(self):
        if self.is_leaf:
            return 0
        return 1 + max(self.left.depth(), self.right.depth())

    def used_features(self):
        """Returns the set of feature indices split on anywhere in the tree."""
        if self.is_leaf:
            return set()
        return {self.feature_index} | self.left.used_features() | self.right.used_features()

    def to_dict(self):
        if self.is_leaf:
            return {'cover': self.cover, 'value': self.leaf_value}
        return {'cover': self.cover, 'feature': self.feature_index,
                'threshold': self.threshold, 'left': self.left.to_dict(),
                'right': self.right.to_dict()}
