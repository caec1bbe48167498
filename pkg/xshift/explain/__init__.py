from xshift.explain.background_set import DEFAULT_BACKGROUND_CAP, BackgroundSet
from xshift.explain.explainer import ExplainConfig, engine_from_name, explain
from xshift.explain.explanation_matrix import (ExplanationMatrix, ExplanationMethod,
                                               reconstruct_predictions)
from xshift.explain.gaussian_explainer import shap_gaussian_observational
from xshift.explain.interventional_explainer import shap_interventional
from xshift.explain.linear_explainer import shap_linear_independent
