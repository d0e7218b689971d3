"""Text and JSON renderings of a :class:`SuiteReport`."""
import json

from tabulate import tabulate

from .errors import ParseError
from .suites import SuiteReport

__all__ = ['emit_report', 'load_report']


def _text(report: SuiteReport) -> str:
    rows = [(law.name, law.samples, law.violation_count, law.status) for law in report.laws]
    lines = [f'suite: {report.suite}', f'statement: {report.statement}',
             tabulate(rows, headers=['law', 'samples', 'violations', 'status'],
                      tablefmt='github')]
    for law in report.laws:
        for v in law.violations:
            inputs = ', '.join(f'{k}={v.inputs[k]}' for k in sorted(v.inputs))
            lines.append(f'  {law.name}: {inputs}: expected {v.expected}, got {v.got}')
        for key in sorted(law.details):
            lines.append(f'  {law.name}: {key} = {law.details[key]}')
    verdict = 'pass' if report.passed else 'fail'
    if report.control:
        verdict += ' (control, expected fail: {})'.format('ok' if report.ok else 'NOT OK')
    lines.append(f'result: {verdict}, {report.duration_ms} ms')
    return '\n'.join(lines)


def emit_report(report: SuiteReport, fmt: str = 'text') -> str:
    if fmt == 'json':
        return json.dumps(report.to_dict(), sort_keys=True, indent=2)
    if fmt == 'text':
        return _text(report)
    raise ValueError(f'unknown report format {fmt!r}')


def load_report(text: str) -> SuiteReport:
    """Parse a JSON report back into a :class:`SuiteReport`."""
    try:
        return SuiteReport.from_dict(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        raise ParseError(f'not a suite report: {e}') from None
