# conekit/repro/nonassoc.py
"""
The Lorentzian tensor product is not associative.

z_lam = lam e0 (x) e0 (x) e0 + sum_i e_i (x) e_i (x) e_i lies in
L_n (x)L (L_n (x)L C[l1n]) iff lam >= 1, while membership in
(L_n (x)L L_n) (x)L C[l1n] forces lam >= gamma2(id: l1n -> l1n) = sqrt(n).
"""

import logging
import math
from typing import Iterable, Optional

import numpy as np

from conekit.cones.core import ConeDescriptor
from conekit.cones.tensors import Tensor2, max_member_lorentz
from conekit.idealnorms.core import gamma2
from conekit.repro.report import ReproReport
from conekit.spaces.core import OperatorMatrix, SpaceDescriptor, ball_extreme_points

logger = logging.getLogger(__name__)

EDGE = 1e-6
GAMMA_TOL = 1e-6


def z_tensor(lam: float, n: int) -> np.ndarray:
    z = np.zeros((n + 1, n + 1, n + 1))
    z[0, 0, 0] = lam
    for i in range(1, n + 1):
        z[i, i, i] = 1.0
    return z


def right_associated_member(lam: float, n: int, tol: float = 1e-9) -> bool:
    """
    Contract the last leg with every extreme ray (1, s) of C[linfn], the dual of
    C[l1n]; each slice must lie in L_n (x)max L_n.
    """
    z = z_tensor(lam, n)
    lorentz = ConeDescriptor.lorentz(n)
    for s in ball_extreme_points(SpaceDescriptor.linf(n)):
        functional = np.concatenate([[1.0], s])
        slice_ = Tensor2(np.tensordot(z, functional, axes=([2], [0])), lorentz, lorentz)
        if not max_member_lorentz(slice_, tol=tol):
            return False
    return True


def diagonal_reduction(z: np.ndarray) -> np.ndarray:
    """(D S (x) id)(z): keep e_i (x) e_i in the first two legs and merge them."""
    n1 = z.shape[0]
    return np.array([z[i, i, :] for i in range(n1)])


def nonassociativity_check(n: int, report: Optional[ReproReport] = None) -> ReproReport:
    if not 2 <= n <= 6:
        raise ValueError(f"n must lie in [2, 6], got {n}")
    report = ReproReport(f"nonassoc-{n}") if report is None else report

    for lam, expected in ((1.0 - EDGE, False), (1.0 + EDGE, True), (0.5, False)):
        member = right_associated_member(lam, n, tol=EDGE / 10)
        report.add(f"n={n}: z_lam right-associated membership at lam={lam:g}", expected, member,
                   member == expected, EDGE, anchor="right-associated membership iff lam >= 1")

    reduced = diagonal_reduction(z_tensor(1.0, n))
    central = np.diag([1.0] + [1.0] * n)
    report.close(f"n={n}: D S reduction is the central map lam (+) id", 0.0,
                 float(np.max(np.abs(reduced - central))), 1e-15, anchor="(D S (x) id)(z_lam)")

    identity = OperatorMatrix(np.eye(n), SpaceDescriptor.l1(n), SpaceDescriptor.l1(n))
    value = gamma2(identity)
    report.close(f"n={n}: gamma2(id on l1n) = sqrt(n)", math.sqrt(n), value, GAMMA_TOL,
                 anchor="gamma2(id) = d(l1n, l2n) = sqrt(n)")
    logger.info(f"Non-associativity n={n}: gamma2={value:.8f}")
    return report


def nonassociativity_suite(dims: Iterable[int] = range(2, 7), seed: Optional[int] = None) -> ReproReport:
    report = ReproReport("nonassoc", seed=seed)
    dims = list(dims)
    report.inputs['dims'] = dims
    for n in dims:
        nonassociativity_check(n, report)
    return report
