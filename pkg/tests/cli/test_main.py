"""Tests for the xshift command line."""
import io
import json
import os
import unittest
from contextlib import redirect_stdout

from xshift.cli.main import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from xshift.cli.report import SCHEMA, parse_json

TEST_DIRECTORY = os.path.dirname(__file__)


def run_main(argv, environ=None):
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = main(argv, environ=environ or {})
    return code, buffer.getvalue()


class TestMain(unittest.TestCase):

    def test_usage_error(self):
        code, output = run_main(['run', '--experiment', 'unused', '--n', '10'])
        self.assertEqual(code, EXIT_USAGE)
        error = json.loads(output)
        self.assertEqual(error['schema'], SCHEMA)
        self.assertEqual(error['error']['type'], 'ConfigurationError')

    def test_invalid_flags(self):
        for argv in (['run', '--experiment', 'bogus'],
                     ['run', '--experiment', 'unused', '--n', 'many'],
                     ['run', '--experiment', 'unused', '--frobnicate'],
                     []):
            code, output = run_main(argv)
            self.assertEqual(code, EXIT_USAGE)
            error = json.loads(output)
            self.assertEqual(error['schema'], SCHEMA)
            self.assertEqual(error['error']['type'], 'ConfigurationError')
        _, output = run_main(['run', '--experiment', 'bogus'])
        self.assertIn('bogus', json.loads(output)['error']['message'])

    def test_bad_seed_environment(self):
        code, _ = run_main(['run', '--experiment', 'unused', '--quick'],
                           environ={'XSHIFT_SEED': '-3'})
        self.assertEqual(code, EXIT_USAGE)

    def test_run_failure(self):
        path = os.path.join(TEST_DIRECTORY, 'missing-directory', 'report.json')
        code, output = run_main(['run', '--experiment', 'unused', '--n', '300', '--out', path])
        self.assertEqual(code, EXIT_FAILURE)
        self.assertEqual(json.loads(output)['error']['type'], 'XShiftError')

    def test_output_is_deterministic(self):
        argv = ['run', '--experiment', 'multivariate', '--n', '400']
        first_code, first = run_main(argv)
        second_code, second = run_main(argv)
        self.assertEqual((first_code, second_code), (EXIT_OK, EXIT_OK))
        self.assertEqual(first, second)
        report = parse_json(first)
        self.assertEqual(report.config['n'], 400)
        self.assertEqual(len(report.rows), 4)

    def test_seed_environment_overrides_flag(self):
        code, output = run_main(['run', '--experiment', 'unused', '--n', '300', '--seed', '1'],
                                environ={'XSHIFT_SEED': '9'})
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(parse_json(output).config['seed'], 9)

    def test_quick_quantify_csv(self):
        code, output = run_main(['run', '--experiment', 'quantify', '--quick', '--n', '400',
                                 '--B', '15', '--m', '40', '--format', 'csv'])
        self.assertEqual(code, EXIT_OK)
        lines = output.splitlines()
        self.assertEqual(lines[0], 'comparison,method,statistic,p_value,verdict')
        self.assertEqual(len(lines), 3)

if __name__ == '__main__':
    res = unittest.main(verbosity=3, exit=False)
