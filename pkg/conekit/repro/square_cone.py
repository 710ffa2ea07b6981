# conekit/repro/square_cone.py
"""
On the cone over the square every positive map into a Lorentz cone is
Lorentz-EA, the cone analogue of pi2(v) = ||v|| for v: linf2 -> l2m.
"""

import logging
from typing import Optional

import numpy as np

from conekit.classify.falsify import lor_ea_product_check
from conekit.config import get_config
from conekit.cones.core import ConeDescriptor, ConeMap, member
from conekit.cones.tensors import j_matrix
from conekit.idealnorms.core import pi2
from conekit.repro.report import ReproReport
from conekit.spaces.core import OperatorMatrix, SpaceDescriptor, op_norm

logger = logging.getLogger(__name__)

NORM_TOL = 1e-6
IDENTITY_TOL = 1e-12
MAX_M = 4
SQUARE = SpaceDescriptor.linf(2)


def _random_v(rng: np.random.Generator) -> OperatorMatrix:
    m = int(rng.integers(1, MAX_M + 1))
    return OperatorMatrix(rng.standard_normal((m, 2)), SQUARE, SpaceDescriptor.l2(m))


def two_summing_gap(trials: int, rng: np.random.Generator) -> float:
    """max |pi2(v) - ||v||| over random v: linf2 -> l2m."""
    worst = 0.0
    for _ in range(trials):
        v = _random_v(rng)
        worst = max(worst, abs(pi2(v) - op_norm(v)))
    return worst


def random_square_positive(rng: np.random.Generator) -> ConeMap:
    """1 (+) phi with ||phi: linf2 -> l2m|| <= 1."""
    v = _random_v(rng)
    phi = v.entries * rng.uniform(0.0, 1.0) / max(op_norm(v), 1e-12)
    matrix = np.zeros((phi.shape[0] + 1, 3))
    matrix[0, 0] = 1.0
    matrix[1:, 1:] = phi
    return ConeMap(matrix, ConeDescriptor.over(SQUARE), ConeDescriptor.lorentz(phi.shape[0]))


def mixed_extreme_decomposition(n: int, rng: np.random.Generator):
    """
    For Q = [[1, 0], [1, 0], [0, a^T]] with a unit a in R^n, Q J_n Q^T and
    the separable form (x y^T + y x^T) / 2 with x = (1, 1, -1), y = (1, 1, 1).
    """
    a = rng.standard_normal(n)
    a /= np.linalg.norm(a)
    q = np.zeros((3, n + 1))
    q[0, 0] = q[1, 0] = 1.0
    q[2, 1:] = a
    x = np.array([1.0, 1.0, -1.0])
    y = np.array([1.0, 1.0, 1.0])
    return q @ j_matrix(n) @ q.T, 0.5 * (np.outer(x, y) + np.outer(y, x)), x, y


def square_cone_check(trials: int = 500, seed: Optional[int] = None, map_trials: int = 20) -> ReproReport:
    seed = get_config().seed if seed is None else seed
    report = ReproReport("square-cone", seed=seed, inputs={'trials': trials, 'map_trials': map_trials})
    rng = np.random.default_rng([seed, 0])

    gap = two_summing_gap(trials, rng)
    report.close("pi2(v) = ||v|| on linf2", 0.0, gap, NORM_TOL, anchor="linf2 has the 2-summing property")
    zero = OperatorMatrix(np.zeros((2, 2)), SQUARE, SpaceDescriptor.l2(2))
    report.close("pi2(0) = ||0|| = 0", 0.0, abs(pi2(zero)) + abs(op_norm(zero)), 0.0, anchor="degenerate case")

    failures = 0
    for i in range(map_trials):
        p = random_square_positive(rng)
        if not lor_ea_product_check(p, p, trials=10, seed=int(rng.integers(2 ** 31))):
            failures += 1
            logger.warning(f"Positive square-cone map {i} failed the Lorentz-EA check")
    report.add("positive maps on the square cone are Lorentz-EA", 0, failures, failures == 0,
               anchor="Pos(C[linf2], L_m) = LorEA2(C[linf2], L_m)")

    lhs, rhs, x, y = mixed_extreme_decomposition(int(rng.integers(1, 5)), rng)
    report.close("(Q (x) Q)(J) equals its separable decomposition", 0.0,
                 float(np.max(np.abs(lhs - rhs))), IDENTITY_TOL, anchor="mixed extreme point case")
    square = ConeDescriptor.over(SQUARE)
    in_cone = member(x, square) and member(y, square)
    report.add("decomposition vectors lie in C[linf2]", True, in_cone, in_cone, anchor="mixed extreme point case")
    logger.info(f"Square cone: 2-summing gap {gap:.2e}, overall={report.overall}")
    return report
