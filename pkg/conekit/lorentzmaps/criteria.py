# conekit/lorentzmaps/criteria.py
"""
Class criteria for maps between Lorentz cones.

max_ea_criterion  eigenvalues of J_m P J_n P^T, lambda_0 >= sum of the rest
is_eb_lorentz     trace norm of the Sinkhorn diagonal of P + eps e0 e0^T
"""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from conekit.config import get_config
from conekit.cones.tensors import j_matrix
from conekit.errors import NoConvergence, NotInterior, NotPositive
from conekit.lorentzmaps.positivity import (
    as_lorentz_matrix,
    is_interior_positive,
    is_lorentz_positive,
    s_procedure_margin,
)
from conekit.lorentzmaps.sinkhorn import sinkhorn_normal_form
from conekit.numerics.linalg import sym_eig

logger = logging.getLogger(__name__)


def _require_positive(a: np.ndarray, tol: float) -> None:
    if not is_lorentz_positive(a, tol=tol):
        raise NotPositive(f"Map of shape {a.shape} is not Lorentz-positive")


def _congruence_eigenvalues(a: np.ndarray) -> np.ndarray:
    """
    For positive P there is lam >= 0 with K = P J_n P^T - lam J_m >= 0
    (S-procedure on P^T). Then J_m P J_n P^T = J_m K + lam I, whose spectrum
    is lam + spec(K^1/2 J_m K^1/2), a symmetric matrix.
    """
    jm = j_matrix(a.shape[0] - 1)
    _, lam = s_procedure_margin(a.T)
    k = a @ j_matrix(a.shape[1] - 1) @ a.T - lam * jm
    w, v = sym_eig(k)
    scale = 1.0 + float(np.max(np.abs(w), initial=0.0))
    if w[-1] < -get_config().tol_psd * scale:
        raise NotPositive(f"P J P^T - lam J has eigenvalue {w[-1]:.2e}; the map is not Lorentz-positive")
    root = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.T
    values, _ = sym_eig(root @ jm @ root)
    return values + lam


def j_eigenvalues(p) -> np.ndarray:
    """
    Eigenvalues of J_m P J_n P^T in descending order. Interior maps go
    through the Sinkhorn central form, boundary maps through a symmetric
    congruence; both are real by construction.
    """
    a = as_lorentz_matrix(p)
    if is_interior_positive(a):
        try:
            return sinkhorn_normal_form(a).j_eigenvalues()
        except NoConvergence as exc:
            logger.warning(f"Falling back to the congruence path: {exc}")
    return _congruence_eigenvalues(a)


def max_ea_criterion(p, tol: Optional[float] = None) -> Tuple[bool, np.ndarray]:
    """
    P in maxEA2(L_n, L_m) iff the eigenvalues of J_m P J_n P^T are
    nonnegative and the largest dominates the sum of the others.
    """
    config = get_config()
    tol = config.threshold_tol if tol is None else tol
    a = as_lorentz_matrix(p)
    _require_positive(a, config.tol_psd)

    values = j_eigenvalues(a)
    scale = 1.0 + float(np.max(np.abs(values), initial=0.0))
    nonnegative = bool(np.all(values >= -tol * scale))
    dominant = bool(values[0] >= np.sum(values[1:]) - tol * scale)
    verdict = nonnegative and dominant
    logger.debug(f"maxEA eigenvalues {np.round(values, 8).tolist()} -> {verdict}")
    return verdict, values


def is_eb_lorentz(
    p,
    tol: Optional[float] = None,
    eps_schedule: Optional[Sequence[float]] = None,
    assume_positive: bool = False,
) -> bool:
    """
    EB test on Lorentz legs. Every regularized map P + eps max(1, ||P||) e0 e0^T
    must have a Sinkhorn diagonal of trace norm at most 1 + tol.
    """
    config = get_config()
    tol = config.threshold_tol if tol is None else tol
    schedule = config.eb_eps_schedule if eps_schedule is None else tuple(eps_schedule)
    a = as_lorentz_matrix(p)
    if not assume_positive:
        _require_positive(a, config.tol_psd)

    size = max(1.0, float(np.linalg.norm(a, 2)))
    corner = np.zeros_like(a)
    corner[0, 0] = 1.0
    for eps in schedule:
        regularized = a + eps * size * corner
        try:
            form = sinkhorn_normal_form(regularized, check_interior=False)
        except NotInterior:
            logger.warning(f"Regularized map not interior at eps={eps:.0e}")
            return False
        if form.trace_norm > 1.0 + tol:
            logger.debug(f"Trace norm {form.trace_norm:.6f} > 1 at eps={eps:.0e}")
            return False
    return True
