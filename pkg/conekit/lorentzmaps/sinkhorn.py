# conekit/lorentzmaps/sinkhorn.py
"""
Sinkhorn normal form of interior Lorentz-positive maps: automorphisms A, B
with B P A = 1 (+) Diag(v), v a diagonal contraction.

The iteration alternates boosts that send P(e0) and P^T(e0) to multiples of
e0, then diagonalizes the spatial block with an SVD.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from conekit.config import get_config
from conekit.errors import NoConvergence, NotInterior
from conekit.lorentzmaps.automorphisms import boost_to_e0, spatial
from conekit.lorentzmaps.positivity import as_lorentz_matrix, is_interior_positive

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SinkhornForm:
    """B P A = central; B carries the scalar 1/scale."""
    a: np.ndarray
    b: np.ndarray
    v: np.ndarray
    residual: float
    scale: float
    iterations: int

    @property
    def trace_norm(self) -> float:
        return float(np.sum(np.abs(self.v)))

    def central(self) -> np.ndarray:
        return central_matrix(self.v, self.b.shape[0] - 1, self.a.shape[0] - 1)

    def j_eigenvalues(self) -> np.ndarray:
        """Eigenvalues of J_m P J_n P^T, descending: scale^2 (1, v_i^2, 0, ...)."""
        m = self.b.shape[0] - 1
        squares = np.zeros(m)
        squares[:self.v.shape[0]] = self.v ** 2
        values = self.scale ** 2 * np.concatenate([[1.0], squares])
        return np.sort(values)[::-1]

    def to_dict(self) -> dict:
        return {
            'A': self.a.tolist(),
            'B': self.b.tolist(),
            'v': self.v.tolist(),
            'residual': self.residual,
            'scale': self.scale,
            'iterations': self.iterations,
        }


def central_matrix(v, m: int, n: int) -> np.ndarray:
    """(m+1) x (n+1) matrix 1 (+) Diag(v)."""
    out = np.zeros((m + 1, n + 1))
    out[0, 0] = 1.0
    for i, value in enumerate(np.asarray(v, dtype=float)):
        out[i + 1, i + 1] = value
    return out


def sinkhorn_normal_form(
    p,
    tol: Optional[float] = None,
    max_iter: Optional[int] = None,
    interior_tol: float = 1e-12,
    check_interior: bool = True,
) -> SinkhornForm:
    """
    Normal form of an interior map Lorentz(n) -> Lorentz(m). Callers that
    built the map as positive plus an interior term may skip the check.
    """
    config = get_config()
    tol = config.sinkhorn_tol if tol is None else tol
    max_iter = config.sinkhorn_max_iter if max_iter is None else max_iter

    original = as_lorentz_matrix(p)
    if check_interior and not is_interior_positive(original, tol=interior_tol):
        raise NotInterior("Map is not in the interior of the Lorentz-positive cone")

    m, n = original.shape[0] - 1, original.shape[1] - 1
    current = original.copy()
    a_total = np.eye(n + 1)
    b_total = np.eye(m + 1)

    for iteration in range(1, max_iter + 1):
        b_step = boost_to_e0(current[:, 0])
        current = b_step @ current
        b_total = b_step @ b_total

        a_step = boost_to_e0(current[0, :])
        current = current @ a_step.T
        a_total = a_total @ a_step.T

        t = current[0, 0]
        error = max(np.linalg.norm(current[1:, 0]), np.linalg.norm(current[0, 1:])) / t
        if error <= tol:
            break
    else:
        raise NoConvergence(f"Sinkhorn iteration did not reach {tol:.1e} in {max_iter} steps")

    t = float(current[0, 0])
    u, sigma, vt = np.linalg.svd(current[1:, 1:] / t, full_matrices=True)
    b = spatial(u.T) @ b_total / t
    a = a_total @ spatial(vt.T)
    form_v = sigma.copy()
    residual = float(np.linalg.norm(b @ original @ a - central_matrix(form_v, m, n)))
    logger.debug(f"Sinkhorn converged in {iteration} steps, residual {residual:.2e}")
    return SinkhornForm(a=a, b=b, v=form_v, residual=residual, scale=t, iterations=iteration)
