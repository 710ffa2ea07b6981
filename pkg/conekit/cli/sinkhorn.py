# conekit/cli/sinkhorn.py
"""
conekit sinkhorn --in FILE

The file holds the full (m+1) x (n+1) matrix of a map L_n -> L_m, with
dom = l2(n) and cod = l2(m).
"""

import logging
from typing import Optional

import click

from conekit.cli.io import build_report, dumps, exit_on_error, load_matrix_file
from conekit.config import get_config
from conekit.errors import DimensionMismatch, UnsupportedError
from conekit.lorentzmaps.sinkhorn import sinkhorn_normal_form

logger = logging.getLogger(__name__)

ANCHOR = "B P A = 1 (+) v for a diagonal contraction v"
# reconstruction error ||B P A - 1 (+) v|| reported as the value
RESIDUAL_BOUND = 1e-8


@click.command()
@click.option('--in', 'path', required=True, type=click.Path(exists=True, dir_okay=False), help='Lorentz map file')
@click.option('--tol', type=float, default=None, help='Off-diagonal tolerance')
@click.option('--max-iter', type=int, default=None, help='Iteration cap')
@exit_on_error
def sinkhorn(path: str, tol: Optional[float], max_iter: Optional[int]):
    """Sinkhorn normal form B P A = 1 (+) v of an interior Lorentz map."""
    source = load_matrix_file(path)
    if not (source.dom.is_euclidean and source.cod.is_euclidean):
        raise UnsupportedError(f"Sinkhorn form needs Lorentz cones, got {source.dom} -> {source.cod}")
    expected = (source.cod.dim + 1, source.dom.dim + 1)
    if source.matrix.shape != expected:
        raise DimensionMismatch(f"Lorentz map needs a {expected[0]}x{expected[1]} matrix, got {source.matrix.shape}")

    form = sinkhorn_normal_form(source.matrix, tol=tol, max_iter=max_iter)
    logger.info(f"Sinkhorn form after {form.iterations} steps, residual {form.residual:.2e}")
    result = dict(
        form.to_dict(),
        value=form.residual,
        threshold=RESIDUAL_BOUND,
        tolerance=get_config().sinkhorn_tol if tol is None else tol,
        paper_anchor=ANCHOR,
        **{'pass': form.residual <= RESIDUAL_BOUND},
    )
    click.echo(dumps(build_report('sinkhorn', source.to_dict(), [result])))
