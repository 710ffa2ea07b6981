# conekit/cli/classify.py
"""
conekit classify --in FILE [--lambda LAM]
"""

import logging
from typing import Optional

import click

from conekit.classify.central import CentralMap, classify_central
from conekit.classify.falsify import lor_eb_falsify
from conekit.cli.io import build_report, dumps, exit_on_error, load_matrix_file
from conekit.config import get_config
from conekit.errors import SchemaError

logger = logging.getLogger(__name__)


@click.command()
@click.option('--in', 'path', required=True, type=click.Path(exists=True, dir_okay=False), help='Central-map file')
@click.option('--lambda', 'lam', type=float, default=None, help='Scalar part; overrides the file')
@click.option('--trials', type=int, default=0, show_default=True,
              help='Random Lorentz legs to try against the LorEB verdict')
@click.option('--seed', type=int, default=None, help='Seed for the leg search')
@click.option('--tol', type=float, default=None, help='Threshold tolerance')
@exit_on_error
def classify(path: str, lam: Optional[float], trials: int, seed: Optional[int], tol: Optional[float]):
    """Classify the central map lam (+) u from FILE."""
    config = get_config()
    seed = config.seed if seed is None else seed
    source = load_matrix_file(path)
    lam = source.lam if lam is None else lam
    if lam is None:
        raise SchemaError("Central map needs 'lambda' in the file or --lambda")

    central = CentralMap(lam, source.operator())
    report = classify_central(central, tol=tol)
    extra = {}
    if trials > 0:
        witness = lor_eb_falsify(central.to_cone_map(), trials=trials, seed=seed)
        extra['witness'] = None if witness is None else witness.to_dict()
        if witness is not None:
            logger.info(f"Leg search found a witness at trial {witness.trial}")

    inputs = dict(source.to_dict(), **{'lambda': lam, 'trials': trials})
    results = report.to_dict()['results']
    click.echo(dumps(build_report('classify', inputs, results, seed=seed, **extra)))
