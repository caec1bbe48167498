from xshift.cli.experiment_config import Experiment, ExperimentConfig, OutputFormat
from xshift.cli.report import Report, ResultRow, emit, parse_json, write_report
from xshift.cli.runner import run
