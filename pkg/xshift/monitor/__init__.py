from xshift.monitor.degradation import (DegradationModel, InputMode, QuantificationConfig,
                                        QuantificationRow, build_degradation_data,
                                        evaluate_degradation, fit_degradation, fit_dummy,
                                        input_mode_from_name, quantify_degradation)
from xshift.monitor.fairness import FairnessResult, fairness_metrics, true_positive_rate
from xshift.monitor.posterior_experiment import Comparison, posterior_shift_experiment
from xshift.monitor.shift_detector import DetectionConfig, detect_shift
from xshift.monitor.shift_report import ShiftReport
