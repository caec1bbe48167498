from xshift.synth.gaussian_spec import GaussianSpec
from xshift.synth.multivariate_normal import sample_mvn
from xshift.synth.synthetic_task import (SyntheticTask, TargetRule, TaskName, make_task_data,
                                         make_test_data, standard_tasks, train_test_split)
