# conekit/repro/constants.py
"""
Exact constants of the reproduction suites.

Matrices are sympy objects built from rationals and explicit square roots;
`to_float` is the single conversion point into numpy.
"""

import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, Tuple

import numpy as np
import sympy as sp

logger = logging.getLogger(__name__)

FROZEN_PATH = Path(__file__).parent / "frozen_constants.json"

R = sp.Rational
ROOT_131_HALF = sp.sqrt(R(131, 2)) / 6

# completely positive and completely copositive channel on 3x3 matrices
PERES_WEIGHTS = (R(3257, 6884), R(450, 1721), R(450, 1721), R(27, 6884))

PERES_KRAUS = (
    sp.Matrix([[1, 0, 0], [0, 1, 0], [0, 0, 0]]) / sp.sqrt(2),
    sp.Matrix([
        [0, ROOT_131_HALF, 0],
        [ROOT_131_HALF, 0, -R(3, 5)],
        [R(1, 30), 0, 0],
    ]) / 2,
    sp.Matrix([
        [ROOT_131_HALF, 0, R(3, 5)],
        [0, -ROOT_131_HALF, 0],
        [0, R(1, 30), 0],
    ]) / 2,
    sp.Matrix([[0, 1, 0], [-1, 0, 0], [0, 0, 1]]) / sp.sqrt(3),
)

PERES_VECTORS = (
    sp.Matrix([-1, sp.sqrt(3), sp.sqrt(21)]) / 5,
    sp.Matrix([2, 0, sp.sqrt(21)]) / 5,
    sp.Matrix([-1, -sp.sqrt(3), sp.sqrt(21)]) / 5,
)

_Q = R(28, 97)
PERES_FUNCTIONALS = (
    sp.eye(3),
    sp.Matrix([
        [R(1, 2), _Q, -_Q],
        [_Q, R(1, 6), -R(1, 6)],
        [-_Q, -R(1, 6), -R(1, 3)],
    ]),
    sp.Matrix([
        [0, 0, 0],
        [0, R(2, 3), R(1, 3)],
        [0, R(1, 3), -R(1, 3)],
    ]),
    sp.Matrix([
        [R(1, 2), -_Q, _Q],
        [-_Q, R(1, 6), -R(1, 6)],
        [_Q, -R(1, 6), -R(1, 3)],
    ]),
)

# maps of the non-convexity example on the square cone
PHI_1 = ((1.0, 0.0), (0.0, 0.2))
PHI_2 = ((1.0, 0.3), (0.0, 0.5))


def peres_observables() -> Tuple[sp.Matrix, ...]:
    """I and A_i = 2|a_i><a_i| - I."""
    eye = sp.eye(3)
    return (eye,) + tuple(2 * a * a.T - eye for a in PERES_VECTORS)


def to_float(m: sp.Matrix) -> np.ndarray:
    return np.array(m.evalf(30).tolist(), dtype=float)


@lru_cache(maxsize=1)
def frozen_constants() -> Dict[str, object]:
    with FROZEN_PATH.open(encoding="utf-8") as f:
        data = json.load(f)
    logger.debug(f"Loaded frozen constants ({data.get('provenance')})")
    return data
