# conekit/lorentzmaps/positivity.py
"""
Positivity of maps between Lorentz cones.

P is positive iff P e0 in L_m, P^T e0 in L_n and there is lambda >= 0 with
P^T J_m P - lambda J_n >= 0 (S-procedure). The min-eigenvalue of that
pencil is concave in lambda, so its maximum is found by bounded Brent
search in scipy.
"""

import logging
from typing import Callable, Tuple, Union

import numpy as np
from scipy.optimize import minimize_scalar

from conekit.cones.core import ConeMap
from conekit.cones.tensors import j_matrix
from conekit.errors import DimensionMismatch

logger = logging.getLogger(__name__)


def as_lorentz_matrix(p: Union[ConeMap, np.ndarray]) -> np.ndarray:
    if isinstance(p, ConeMap):
        if not p.between_lorentz:
            raise DimensionMismatch(f"Expected a map between Lorentz cones, got {p.dom} -> {p.cod}")
        return p.matrix
    a = np.asarray(p, dtype=float)
    if a.ndim != 2 or min(a.shape) < 2:
        raise DimensionMismatch(f"Expected an (m+1) x (n+1) matrix, got {a.shape}")
    return a


def _in_lorentz(x: np.ndarray, slack: float) -> bool:
    return x[0] >= np.linalg.norm(x[1:]) - slack


def _maximize(f: Callable[[float], float], lo: float, hi: float) -> Tuple[float, float]:
    """Bounded Brent on a concave f, then a second pass on a narrow window around the optimum."""
    coarse = minimize_scalar(lambda x: -f(x), bounds=(lo, hi), method="bounded", options={"xatol": 1e-12})
    center = float(coarse.x)
    # bounded Brent resolves x only to sqrt(eps) * |x|
    width = 1e-6 * (1.0 + abs(center))
    lower, upper = max(lo - center, -width), min(hi - center, width)
    if lower < upper:
        fine = minimize_scalar(
            lambda t: -f(center + t), bounds=(lower, upper), method="bounded", options={"xatol": 1e-15},
        )
        center += float(fine.x)
    return f(center), center


def s_procedure_margin(p) -> Tuple[float, float]:
    """
    max over lambda in [0, ||P^T J P|| + 1] of min_eig(P^T J P - lambda J),
    returned with the maximizing lambda.
    """
    a = as_lorentz_matrix(p)
    jm = j_matrix(a.shape[0] - 1)
    jn = j_matrix(a.shape[1] - 1)
    pencil = a.T @ jm @ a
    pencil = 0.5 * (pencil + pencil.T)

    def f(lam: float) -> float:
        return float(np.linalg.eigvalsh(pencil - lam * jn)[0])

    hi = float(np.linalg.norm(pencil, 2)) + 1.0
    return max((f(0.0), 0.0), _maximize(f, 0.0, hi))


def is_lorentz_positive(p, tol: float = 1e-9) -> bool:
    """Decide P(L_n) in L_m up to tol * (1 + ||P||^2)."""
    a = as_lorentz_matrix(p)
    norm = float(np.linalg.norm(a, 2))
    slack = tol * (1.0 + norm)
    if not _in_lorentz(a[:, 0], slack) or not _in_lorentz(a[0, :], slack):
        return False
    margin, lam = s_procedure_margin(a)
    logger.debug(f"S-procedure margin {margin:.3e} at lambda={lam:.4f}")
    return margin >= -tol * (1.0 + norm ** 2)


def is_interior_positive(p, tol: float = 1e-12) -> bool:
    """Strict S-procedure: P maps L_n minus 0 into the interior of L_m."""
    a = as_lorentz_matrix(p)
    norm = float(np.linalg.norm(a, 2))
    if a[0, 0] <= np.linalg.norm(a[1:, 0]) + tol * (1.0 + norm):
        return False
    margin, _ = s_procedure_margin(a)
    return margin > tol * (1.0 + norm ** 2)


def sample_boundary_rays(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Rows (1, u) with u uniform on the unit sphere of R^n."""
    u = rng.standard_normal((count, n))
    u /= np.linalg.norm(u, axis=1, keepdims=True)
    return np.hstack([np.ones((count, 1)), u])


def lorentz_margin(p, rays: np.ndarray) -> float:
    """min over rays x of (Px)_0 - ||(Px)_spatial||."""
    images = np.asarray(rays) @ as_lorentz_matrix(p).T
    return float(np.min(images[:, 0] - np.linalg.norm(images[:, 1:], axis=1)))
