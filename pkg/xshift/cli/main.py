"""Command-line entry point: xshift run --experiment <name> [options]."""
import argparse
import contextlib
import json
import logging
import sys

import numpy as np

from xshift.cli.experiment_config import ALL, Experiment, ExperimentConfig, OutputFormat
from xshift.cli.report import SCHEMA, write_report
from xshift.cli.runner import run
from xshift.explain.explainer import ENGINE_NAMES
from xshift.models.predictor import MODEL_FAMILIES
from xshift.monitor.degradation import INPUT_MODE_NAMES
from xshift.stats.result import DISTANCE_NAMES
from xshift.util.errors import ConfigurationError, XShiftError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAILURE = 3

# Flags whose value maps directly onto an ExperimentConfig argument.
_CONFIG_FLAGS = {'n': 'n', 'seed': 'seed', 'alpha': 'alpha', 'engine': 'engine',
                 'distance': 'distance', 'input_mode': 'input_mode', 'B': 'B', 'm': 'm',
                 'format': 'output_format', 'out': 'output_path', 'model': 'model',
                 'jobs': 'n_jobs'}


class _ArgumentParser(argparse.ArgumentParser):

    """An argument parser that raises ConfigurationError instead of exiting."""

    def error(self, message):
        raise ConfigurationError('%s: %s' % (self.prog, message))


def build_parser():
    parser = _ArgumentParser(
        prog='xshift', description='Detect and quantify explanation shift on synthetic data.')
    commands = parser.add_subparsers(dest='command', required=True)
    run_parser = commands.add_parser('run', help='Run one experiment and print its report.')
    run_parser.add_argument('--experiment', required=True, choices=[e.value for e in Experiment])
    run_parser.add_argument('--n', type=int, help='rows per dataset (default 50000)')
    run_parser.add_argument('--seed', type=int, help='root seed; XSHIFT_SEED overrides it')
    run_parser.add_argument('--alpha', type=float, help='significance level (default 0.05)')
    run_parser.add_argument('--engine', choices=sorted(ENGINE_NAMES))
    run_parser.add_argument('--distance', choices=sorted(DISTANCE_NAMES) + [ALL])
    run_parser.add_argument('--input-mode', dest='input_mode',
                            choices=sorted(INPUT_MODE_NAMES) + [ALL])
    run_parser.add_argument('--B', type=int, help='bootstraps per split (default 2000)')
    run_parser.add_argument('--m', type=int, help='rows per bootstrap (default 1000)')
    run_parser.add_argument('--format', choices=[f.value for f in OutputFormat])
    run_parser.add_argument('--out', help='also write the report to this file')
    run_parser.add_argument('--model', choices=MODEL_FAMILIES)
    run_parser.add_argument('--jobs', type=int, help='worker threads (default 1)')
    run_parser.add_argument('--quick', action='store_true',
                            help='fast mode: n=5000, B=200, m=500 unless given')
    run_parser.add_argument('--timings', action='store_true',
                            help='add wall-clock timings to the report metadata')
    run_parser.add_argument('--verbose', action='store_true', help='log progress to stderr')
    return parser


def config_from_args(args, environ=None):
    """Builds the validated ExperimentConfig for parsed arguments.

    Raises:
        ConfigurationError: If a value is out of range.
    """
    overrides = {target: getattr(args, flag) for flag, target in _CONFIG_FLAGS.items()
                 if getattr(args, flag) is not None}
    overrides['timings'] = args.timings
    if args.quick:
        config = ExperimentConfig.quick(args.experiment, **overrides)
    else:
        config = ExperimentConfig(args.experiment, **overrides)
    return config.with_environment(environ)


def _error_object(err):
    return json.dumps({'schema': SCHEMA,
                       'error': {'type': type(err).__name__, 'message': str(err)}},
                      sort_keys=True) + '\n'


def main(argv=None, environ=None):
    """Runs the command line and returns the process exit code."""
    try:
        args = build_parser().parse_args(argv)
    except ConfigurationError as err:
        sys.stdout.write(_error_object(err))
        return EXIT_USAGE
    logging.basicConfig(stream=sys.stderr, level=logging.INFO if args.verbose else logging.WARNING,
                        format='%(asctime)s %(name)s %(levelname)s: %(message)s')
    try:
        config = config_from_args(args, environ)
    except XShiftError as err:
        sys.stdout.write(_error_object(err))
        return EXIT_USAGE

    if args.verbose:
        with contextlib.redirect_stdout(sys.stderr):
            config.print_parameters()
    try:
        report = run(config)
        data = write_report(report, config.output_format, config.output_path)
    except (XShiftError, np.linalg.LinAlgError, FloatingPointError) as err:
        logger.error('%s failed: %s', config.experiment.value, err)
        sys.stdout.write(_error_object(err))
        return EXIT_FAILURE
    sys.stdout.write(data.decode('utf-8'))
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
