"""
Shared command options and output rendering
"""
import csv
import io
import json
from functools import wraps
from pathlib import Path
from typing import Callable, Optional

import click

from immgeo.config.settings import get_config
from immgeo.constants import REPORT_CSV_COLUMNS
from immgeo.models import CatalogDocument, OutputFormat, ReportDocument, RunConfig
from immgeo.repositories.catalog_repository import CatalogRepository
from immgeo.utils.logger import Logger

FORMATS = [f.value for f in OutputFormat]


def output_options(f: Callable) -> Callable:
    """--format and --out"""
    f = click.option('--out', 'out', type=click.Path(dir_okay=False, writable=True), default=None,
                     help='Write the output to FILE instead of stdout')(f)
    f = click.option('--format', 'output_format', type=click.Choice(FORMATS), default=OutputFormat.JSON.value,
                     show_default=True, help='Output format')(f)
    return f


def run_options(f: Callable) -> Callable:
    """
    --n, --q, --seed and --trials plus the output options; the decorated
    command receives a RunConfig as ``config``

    Usage:
        @cli.command('sing')
        @run_options
        def sing_command(config, out):
            ...
    """
    @click.option('--n', 'n', type=click.IntRange(min=1), required=True, help='Number of matrices')
    @click.option('--q', 'q', type=click.IntRange(min=1), required=True, help='Matrix size')
    @click.option('--seed', type=click.IntRange(0, 2**64 - 1), default=lambda: get_config().DEFAULT_SEED,
                  help='Seed of every random draw')
    @click.option('--trials', type=click.IntRange(min=1), default=lambda: get_config().DEFAULT_TRIALS,
                  help='Random points per randomized check')
    @output_options
    @wraps(f)
    def decorated_function(n, q, seed, trials, output_format, out, **kwargs):
        config = RunConfig(n=n, q=q, seed=seed, trials=trials, output_format=output_format)
        return f(config=config, out=out, **kwargs)
    return decorated_function


def _report_rows(report: ReportDocument):
    for check in report.checks:
        value = check.value if isinstance(check.value, str) else json.dumps(check.value)
        yield {'check': check.check, 'value': value}


def _rows_text(rows) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=REPORT_CSV_COLUMNS, lineterminator='\n')
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def _plain_catalog(document: CatalogDocument) -> str:
    lines = [
        f"{c.label}: dim {c.dim}" + ("" if c.dim_oracle is None else f" (oracle {c.dim_oracle})")
        for c in document.components
    ]
    lines.extend(f"{key}: {value}" for key, value in sorted(document.summary.items()))
    return "\n".join(lines) + "\n"


def render(data, output_format: str) -> str:
    """Text form of a service payload in the requested format"""
    if isinstance(data, CatalogDocument):
        repository = CatalogRepository()
        if output_format == OutputFormat.CSV.value:
            return repository.to_csv(data)
        if output_format == OutputFormat.PLAIN.value:
            return _plain_catalog(data)
        return repository.dumps(data) + "\n"
    if isinstance(data, ReportDocument):
        if output_format == OutputFormat.CSV.value:
            return _rows_text(_report_rows(data))
        if output_format == OutputFormat.PLAIN.value:
            return "".join(f"{row['check']}: {row['value']}\n" for row in _report_rows(data))
        return json.dumps(data.model_dump(mode='json'), indent=2, sort_keys=True) + "\n"
    if output_format == OutputFormat.PLAIN.value and isinstance(data, dict) and 'value' in data:
        value = data['value']
        return (value if isinstance(value, str) else json.dumps(value, sort_keys=True)) + "\n"
    if output_format == OutputFormat.CSV.value and isinstance(data, dict):
        rows = [{'check': k, 'value': v if isinstance(v, str) else json.dumps(v, sort_keys=True)}
                for k, v in sorted(data.items())]
        return _rows_text(rows)
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def emit(response: tuple, output_format: str, out: Optional[str]) -> None:
    """
    Write a service response and exit with its code

    The payload goes to stdout (or ``out``); an error message goes to stderr.
    """
    payload, exit_code = response
    if 'error' in payload:
        click.echo(f"error: {payload['error']}", err=True)
    if payload.get('data') is not None:
        text = render(payload['data'], output_format)
        if out:
            Path(out).write_text(text, encoding='utf-8')
            Logger.info(f"wrote {output_format} output to {out}")
        else:
            click.echo(text, nl=False)
    click.get_current_context().exit(exit_code)
