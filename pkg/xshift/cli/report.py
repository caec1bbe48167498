"""A module to build experiment reports and serialize them as JSON, CSV or markdown.

JSON is the canonical format: keys are sorted and floats are written in
their shortest round-trip form, so the same report always serializes to
the same bytes and parses back to an equal report. The shortest form is
used instead of a fixed 17 significant digits; both parse back to the
same double (0.1 is written as 0.1, not 0.10000000000000001).
"""
import csv
import dataclasses
import enum
import io
import json
from typing import List, Optional

import numpy as np

from xshift.cli.experiment_config import OutputFormat
from xshift.util.errors import XShiftError

SCHEMA = 'xshift-report/1'
DISTINCT = 'Distinct'
NOT_DISTINCT = 'Not Distinct'
CSV_FIELDS = ('comparison', 'method', 'statistic', 'p_value', 'verdict')


class ReportFormatError(XShiftError):
    """Raised when a serialized report cannot be read back."""


def verdict(p_value, alpha):
    """Returns 'Distinct' when p_value < alpha, None for results without a p-value."""
    if p_value is None:
        return None
    return DISTINCT if p_value < alpha else NOT_DISTINCT


@dataclasses.dataclass
class ResultRow:

    """One line of a report table.

    Attributes:
        comparison (str): What was compared, e.g. 'P(X_1), P(X_1_ood)'.
        method (str): Test or distance used.
        statistic (float): Test statistic, distance or error.
        p_value (float): KS p-value, None for distances and errors.
        verdict (str): 'Distinct' or 'Not Distinct', None without a p-value.
    """

    comparison: str
    method: str
    statistic: float
    p_value: Optional[float] = None
    verdict: Optional[str] = None

    def to_dict(self):
        return dataclasses.asdict(self)


@dataclasses.dataclass
class Report:

    """A complete experiment result.

    Attributes:
        config (dict): Echo of the experiment configuration.
        rows (list (ResultRow)): Table rows.
        metadata (dict): Library version, engine, derived seeds and models.
        schema (str): Report schema version.
    """

    config: dict
    rows: List[ResultRow]
    metadata: dict = dataclasses.field(default_factory=dict)
    schema: str = SCHEMA

    def __post_init__(self):
        self.config = to_plain(self.config)
        self.metadata = to_plain(self.metadata)

    def to_dict(self):
        return {'schema': self.schema, 'config': self.config,
                'rows': [row.to_dict() for row in self.rows], 'metadata': self.metadata}


def to_plain(value):
    """Converts numpy values, enums and tuples into JSON-ready Python values."""
    if isinstance(value, dict):
        return {str(key): to_plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(item) for item in value]
    if isinstance(value, np.ndarray):
        return to_plain(value.tolist())
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, enum.Enum):
        return value.value
    return value


def emit(report, output_format):
    """Serializes a report.

    Args:
        report (Report): Report to serialize.
        output_format (OutputFormat): json, csv or markdown.

    Returns:
        The serialized report as UTF-8 bytes.
    """
    output_format = OutputFormat(output_format)
    if output_format == OutputFormat.JSON:
        text = emit_json(report)
    elif output_format == OutputFormat.CSV:
        text = emit_csv(report)
    else:
        text = emit_markdown(report)
    return text.encode('utf-8')


def emit_json(report):
    """Serializes a report as canonical JSON with repr floats, which read back bit-exact."""
    return json.dumps(report.to_dict(), sort_keys=True, indent=2, allow_nan=False) + '\n'


def emit_csv(report):
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, lineterminator='\n')
    writer.writeheader()
    for row in report.rows:
        writer.writerow({key: '' if value is None else _csv_value(value)
                         for key, value in row.to_dict().items()})
    return buffer.getvalue()


def _csv_value(value):
    if isinstance(value, float):
        return repr(value)
    return value


def emit_markdown(report):
    """Renders the rows as a markdown table.

    Tables with p-values use the columns Comparison | p-value | Conclusions;
    tables of distances or errors use Comparison | Value.
    """
    tested = any(row.p_value is not None for row in report.rows)
    if tested:
        lines = ['| Comparison | p-value | Conclusions |', '|---|---|---|']
        for row in report.rows:
            p_value = '' if row.p_value is None else '%.2g' % row.p_value
            lines.append('| %s | %s | %s |' % (row.comparison, p_value, row.verdict or ''))
    else:
        lines = ['| Comparison | Value |', '|---|---|']
        for row in report.rows:
            lines.append('| %s | %.3g |' % (row.comparison, row.statistic))
    return '\n'.join(lines) + '\n'


def parse_json(text):
    """Reads a report written by emit_json.

    Raises:
        ReportFormatError: If the text is not a report of the supported schema.
    """
    if isinstance(text, bytes):
        text = text.decode('utf-8')
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ReportFormatError('Report is not valid JSON: %s' % err)
    if not isinstance(data, dict) or data.get('schema') != SCHEMA:
        raise ReportFormatError('Expected a report with schema %r' % SCHEMA)
    try:
        rows = [ResultRow(**row) for row in data['rows']]
        return Report(data['config'], rows, data['metadata'], data['schema'])
    except (KeyError, TypeError) as err:
        raise ReportFormatError('Malformed report: %s' % err)


def write_report(report, output_format, path=None):
    """Serializes a report and writes it to path when one is given.

    Returns:
        The serialized bytes.

    Raises:
        XShiftError: If the path cannot be written.
    """
    data = emit(report, output_format)
    if path is not None:
        try:
            with open(path, 'wb') as handle:
                handle.write(data)
        except OSError as err:
            raise XShiftError('Cannot write report to %s: %s' % (path, err))
    return data
