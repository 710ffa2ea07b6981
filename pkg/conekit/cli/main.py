# conekit/cli/main.py
"""
conekit command group.
Standard output carries the JSON report only; logs go to standard error.
"""

import logging
import sys

import click

from conekit import __version__
from conekit.cli.classify import classify
from conekit.cli.norm import norm
from conekit.cli.reproduce import reproduce
from conekit.cli.sinkhorn import sinkhorn


@click.group()
@click.version_option(__version__, prog_name='conekit')
@click.option('--verbose', '-v', is_flag=True, help='Debug logging on standard error')
def cli(verbose: bool):
    """Operator ideal norms and cone-map classification."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format='%(asctime)s %(name)s %(levelname)s %(message)s',
    )


cli.add_command(norm)
cli.add_command(classify)
cli.add_command(sinkhorn)
cli.add_command(reproduce)
