"""A module to compute group true positive rates and equal opportunity fairness."""
import dataclasses
import logging
from typing import Dict

import numpy as np

from xshift.util.errors import DimensionMismatchError, EmptyInputError, UndefinedMetricError

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class FairnessResult:

    """True positive rates per group and their reference-protected gap.

    Attributes:
        tpr_by_group (dict): Group label to TP / (TP + FN).
        eof (float): Reference TPR minus protected TPR.
        reference: Label of the reference group.
        protected: Label of the protected group.
    """

    tpr_by_group: Dict[object, float]
    eof: float
    reference: object
    protected: object

    def __post_init__(self):
        assert self.eof == self.tpr_by_group[self.reference] - self.tpr_by_group[self.protected]

    def to_dict(self):
        return {'tpr_by_group': {str(k): v for k, v in sorted(self.tpr_by_group.items(),
                                                                key=lambda item: str(item[0]))},
                'eof': self.eof, 'reference': str(self.reference),
                'protected': str(self.protected)}


def _as_binary(values, name):
    values = np.asarray(values).reshape(-1)
    if values.size == 0:
        raise EmptyInputError('%s is empty' % name)
    if not np.all((values == 0) | (values == 1)):
        raise ValueError('%s must hold only 0 and 1' % name)
    return values.astype(bool)


def true_positive_rate(y_true, y_pred):
    """Returns TP / (TP + FN) for binary label and decision vectors.

    Raises:
        UndefinedMetricError: If there are no positive labels.
    """
    y_true = _as_binary(y_true, 'y_true')
    y_pred = _as_binary(y_pred, 'y_pred')
    positives = int(np.count_nonzero(y_true))
    if positives == 0:
        raise UndefinedMetricError('True positive rate is undefined without positive labels')
    return np.count_nonzero(y_true & y_pred) / positives


def fairness_metrics(y_true, y_pred, groups, reference, protected):
    """Computes the true positive rate of every group and the equal opportunity gap.

    Args:
        y_true (array-like): Binary labels.
        y_pred (array-like): Binary decisions.
        groups (array-like): Group label of every row.
        reference: Label of the reference group.
        protected: Label of the protected group.

    Returns:
        A FairnessResult with eof = TPR(reference) - TPR(protected).

    Raises:
        DimensionMismatchError: If the vectors differ in length.
        UndefinedMetricError: If a named group is absent or a group has no
            positive labels.
    """
    y_true = _as_binary(y_true, 'y_true')
    y_pred = _as_binary(y_pred, 'y_pred')
    groups = np.asarray(groups).reshape(-1)
    if not y_true.size == y_pred.size == groups.size:
        raise DimensionMismatchError('Labels, decisions and groups have lengths %d, %d and %d'
                                     % (y_true.size, y_pred.size, groups.size))

    labels = set(groups.tolist())
    for label in (reference, protected):
        if label not in labels:
            raise UndefinedMetricError('Group %r does not occur in the data' % (label,))

    tpr_by_group = {}
    for label in sorted(labels, key=str):
        rows = groups == label
        positives = int(np.count_nonzero(y_true[rows]))
        if positives == 0:
            raise UndefinedMetricError('True positive rate of group %r is undefined: it has no '
                                       'positive labels' % (label,))
        tpr_by_group[label] = np.count_nonzero(y_true[rows] & y_pred[rows]) / positives

    eof = tpr_by_group[reference] - tpr_by_group[protected]
    logger.debug('TPR %r=%.6g, %r=%.6g, EOF %.6g', reference, tpr_by_group[reference],
                 protected, tpr_by_group[protected], eof)
    return FairnessResult(tpr_by_group, eof, reference, protected)
