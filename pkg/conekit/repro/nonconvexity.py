# conekit/repro/nonconvexity.py
"""
maxEA2(C[linf2], L_2) is not convex: lam (+) phi is in it iff
alpha(phi) <= lam, and alpha is not subadditive.
"""

import logging
from typing import Optional

import numpy as np

from conekit.classify.central import alpha_square, square_max_ea_central
from conekit.classify.falsify import lor_ea_convexity_search
from conekit.config import get_config
from conekit.cones.core import ConeDescriptor, ConeMap
from conekit.repro.constants import PHI_1, PHI_2, frozen_constants
from conekit.repro.report import ReproReport
from conekit.spaces.core import OperatorMatrix, SpaceDescriptor, op_norm

logger = logging.getLogger(__name__)

MARGIN = 1e-4
FROZEN_TOL = 1e-12
THRESHOLD_STEP = 1e-3
ANCHOR = "alpha(phi1) + alpha(phi2) < alpha(phi1 + phi2)"


def _central_map(lam: float, phi: np.ndarray, dom: SpaceDescriptor) -> ConeMap:
    matrix = np.zeros((phi.shape[0] + 1, phi.shape[1] + 1))
    matrix[0, 0] = lam
    matrix[1:, 1:] = phi
    return ConeMap(matrix, ConeDescriptor.over(dom), ConeDescriptor.lorentz(phi.shape[0]))


def _record_convexity_search(report: ReproReport, seed: int, trials: int) -> None:
    """Convex combinations over C[linf3]; recorded only, nothing is asserted."""
    rng = np.random.default_rng([seed, 1])
    dom = SpaceDescriptor.linf(3)
    maps = []
    for _ in range(2):
        phi = rng.standard_normal((2, 3))
        phi /= op_norm(OperatorMatrix(phi, dom, SpaceDescriptor.l2(2)))
        maps.append(_central_map(1.0, phi, dom))
    search = lor_ea_convexity_search(maps[0], maps[1], trials=trials, seed=seed)
    report.inputs['convexity_search'] = [r.to_dict() for r in search.records]


def nonconvexity_check(seed: Optional[int] = None, trials: int = 10) -> ReproReport:
    seed = get_config().seed if seed is None else seed
    report = ReproReport("nonconvexity", seed=seed)
    phi1, phi2 = np.array(PHI_1), np.array(PHI_2)
    report.inputs.update({'phi1': phi1, 'phi2': phi2})

    a1, a2, a12 = alpha_square(phi1), alpha_square(phi2), alpha_square(phi1 + phi2)
    frozen = frozen_constants()
    for label, key, value in (
        ("alpha(phi1)", "alpha_phi1", a1),
        ("alpha(phi2)", "alpha_phi2", a2),
        ("alpha(phi1 + phi2)", "alpha_phi_sum", a12),
    ):
        if frozen.get(key) is None:
            report.add(label, None, value, True, anchor="computed")
        else:
            report.close(label, float(frozen[key]), value, FROZEN_TOL, anchor="regression constant")

    margin = a12 - (a1 + a2)
    report.at_least("alpha is not subadditive", MARGIN, margin, anchor=ANCHOR)
    report.close("alpha(0) = 0", 0.0, alpha_square(np.zeros((2, 2))), 0.0, anchor="degenerate case")

    tol = get_config().threshold_tol
    for name, phi, alpha in (("phi1", phi1, a1), ("phi2", phi2, a2), ("phi1 + phi2", phi1 + phi2, a12)):
        at = square_max_ea_central(alpha + tol, phi)
        report.add(f"alpha(phi) (+) phi is maxEA for {name}", True, at, at, tol,
                   anchor="lam (+) phi is maxEA iff alpha(phi) <= lam")
        below = square_max_ea_central(alpha - THRESHOLD_STEP, phi)
        report.add(f"threshold is sharp for {name}", False, below, not below, THRESHOLD_STEP,
                   anchor="lam (+) phi is maxEA iff alpha(phi) <= lam")
    mixed = square_max_ea_central(a1 + a2, phi1 + phi2)
    report.add("sum of maxEA maps is not maxEA", False, mixed, not mixed, anchor=ANCHOR)

    _record_convexity_search(report, seed, trials)
    logger.info(f"Non-convexity margin {margin:.6f}, overall={report.overall}")
    return report
