from xshift.models.gbdt_model import GbdtModel, GbdtParameters, fit_gbdt
from xshift.models.linear_model import LinearModel, fit_ols, fit_ridge
from xshift.models.predictor import (MODEL_FAMILIES, fit_model, mean_squared_error, predict,
                                     squared_errors)
from xshift.models.tree_node import TreeNode
