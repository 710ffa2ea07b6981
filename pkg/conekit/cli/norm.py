# conekit/cli/norm.py
"""
conekit norm --kind KIND --in FILE
"""

import logging
from typing import Callable, Dict, Optional, Tuple

import click
import numpy as np

from conekit.cli.io import build_report, dumps, exit_on_error, load_matrix_file
from conekit.config import get_config
from conekit.errors import UnsupportedError
from conekit.idealnorms.core import (
    gamma2, gamma2_factorization, gamma2_star_certificate, hs, nuclear, pi2, pietsch_measure,
)
from conekit.spaces.core import OperatorMatrix, op_norm

logger = logging.getLogger(__name__)

Diagnostics = Dict[str, object]


def _op(u: OperatorMatrix, tol: float) -> Tuple[float, Diagnostics]:
    return op_norm(u), {'method': 'extreme points'}


def _hs(u: OperatorMatrix, tol: float) -> Tuple[float, Diagnostics]:
    return hs(u), {'method': 'frobenius'}


def _nuc(u: OperatorMatrix, tol: float) -> Tuple[float, Diagnostics]:
    return nuclear(u, tol=tol), {'method': 'closed form or LP'}


def _pi2(u: OperatorMatrix, tol: float) -> Tuple[float, Diagnostics]:
    if u.dom.is_euclidean or not u.cod.is_euclidean or not u.entries.any():
        return pi2(u, tol=tol), {'method': 'hilbert-schmidt'}
    measure = pietsch_measure(u, tol=tol)
    support = int((measure.weights > tol).sum())
    return float(np.sqrt(max(measure.mass, 0.0))), {'method': 'pietsch SDP', 'support': support, 'mass': measure.mass}


def _gamma2(u: OperatorMatrix, tol: float) -> Tuple[float, Diagnostics]:
    try:
        factorization = gamma2_factorization(u, tol=tol)
    except UnsupportedError:
        return gamma2(u, tol=tol), {'method': 'operator norm'}
    width = int(factorization.functional_vectors.shape[1])
    return factorization.value, {'method': 'gram SDP', 'width': width}


def _gamma2star(u: OperatorMatrix, tol: float) -> Tuple[float, Diagnostics]:
    certificate = gamma2_star_certificate(u, tol=tol)
    return certificate.value, {'method': 'trace duality', 'w': certificate.w}


NORMS: Dict[str, Callable[[OperatorMatrix, float], Tuple[float, Diagnostics]]] = {
    'op': _op,
    'hs': _hs,
    'nuc': _nuc,
    'pi2': _pi2,
    'gamma2': _gamma2,
    'gamma2star': _gamma2star,
}


ANCHORS = {
    'op': "operator norm: largest value on the extreme points of the unit ball",
    'hs': "Hilbert-Schmidt norm: Frobenius norm of the matrix",
    'nuc': "Nuc: least sum of |x_i| |y_i| over rank-one decompositions",
    'pi2': "pi2: least C with a Pietsch measure of mass C^2",
    'gamma2': "gamma2: least factorization through a Hilbert space",
    'gamma2star': "gamma2*: trace dual of gamma2",
}


@click.command()
@click.option('--kind', '-k', required=True, type=click.Choice(sorted(NORMS)), help='Norm to compute')
@click.option('--in', 'path', required=True, type=click.Path(exists=True, dir_okay=False), help='Matrix file')
@click.option('--tol', type=float, default=None, help='Solver tolerance')
@exit_on_error
def norm(kind: str, path: str, tol: Optional[float]):
    """Compute an ideal norm of the matrix in FILE."""
    tol = get_config().solver_tol if tol is None else tol
    source = load_matrix_file(path)
    value, diagnostics = NORMS[kind](source.operator(), tol)
    logger.info(f"{kind} of {source.dom} -> {source.cod}: {value:.8g}")
    result = {
        'kind': kind,
        'value': value,
        'threshold': None,
        'tolerance': tol,
        'pass': True,
        'paper_anchor': ANCHORS[kind],
        'diagnostics': diagnostics,
    }
    click.echo(dumps(build_report('norm', source.to_dict(), [result])))
