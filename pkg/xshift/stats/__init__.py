from xshift.stats.feature_comparison import (count_distinct, distance, distance_vector,
                                             per_feature_compare)
from xshift.stats.kolmogorov_smirnov import ks_p_value, ks_two_sample
from xshift.stats.result import (DistanceMethod, FeatureComparison, TestResult,
                                 distance_from_name)
from xshift.stats.stability_index import psi
from xshift.stats.wasserstein import wasserstein_1d
