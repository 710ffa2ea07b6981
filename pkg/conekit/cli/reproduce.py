# conekit/cli/reproduce.py
"""
conekit reproduce --which NAME|all
"""

import asyncio
import logging
import sys
from typing import Optional

import click

from conekit.cli.io import dumps
from conekit.config import get_config
from conekit.repro.runner import SUITES, run_suites

logger = logging.getLogger(__name__)


@click.command()
@click.option('--which', '-w', required=True, type=click.Choice(list(SUITES) + ['all']), help='Suite to run')
@click.option('--seed', type=int, default=None, help='Base seed; defaults to CONEKIT_SEED')
def reproduce(which: str, seed: Optional[int]):
    """Run reproduction suites and print their reports."""
    seed = get_config().seed if seed is None else seed
    names = list(SUITES) if which == 'all' else [which]
    reports = asyncio.run(run_suites(names, seed))

    payload = reports[0].to_dict() if len(reports) == 1 else [r.to_dict() for r in reports]
    click.echo(dumps(payload))
    for report in reports:
        for check in report.failures():
            click.echo(f"FAIL {report.name}: {check.label} (value {check.value})", err=True)
    if not all(r.overall for r in reports):
        sys.exit(1)
