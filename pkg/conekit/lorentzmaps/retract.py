# conekit/lorentzmaps/retract.py
"""
Retract of a Lorentz cone section onto a smaller Lorentz cone.

For a subspace S of R^{n+1} of dimension k, build alpha: S -> R^k and
beta: R^k -> S with beta alpha = id_S, alpha(S cap L_n) in L_{k-1} and
beta(L_{k-1}) in S cap L_n.

In coordinates y of an orthonormal basis Q of S, the base
{t = 1} cap S cap L_n is the ball y_p + N z with ||z - g|| <= rho, where
y_p is the preimage of e0's functional, N spans {t = 0} cap S and
rho^2 = y_p^T G y_p + ||g||^2, G = Q^T J Q, g = N^T G y_p.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from conekit.cones.tensors import j_matrix
from conekit.errors import DegenerateIntersection, DimensionMismatch
from conekit.numerics.linalg import svd

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Retract:
    alpha: np.ndarray     # k x (n+1)
    beta: np.ndarray      # (n+1) x k
    kind: str             # "interior" or "ray"
    dim: int
    center: np.ndarray
    radius: float

    def roundtrip_error(self, basis) -> float:
        """max ||beta alpha x - x|| over the given columns of S."""
        basis = np.asarray(basis, dtype=float)
        return float(np.max(np.abs(self.beta @ self.alpha @ basis - basis), initial=0.0))

    def to_dict(self) -> dict:
        return {
            'kind': self.kind,
            'dim': self.dim,
            'alpha': self.alpha.tolist(),
            'beta': self.beta.tolist(),
            'center': self.center.tolist(),
            'radius': self.radius,
        }


def _aligned(frame: np.ndarray) -> np.ndarray:
    """Rotate an orthonormal frame so its rows 1..r are as close to the identity as possible."""
    r = frame.shape[1]
    if r == 0:
        return frame
    u, _, v = svd(frame[1:r + 1, :])
    return frame @ v @ u.T


def retract_maps(basis, tol: float = 1e-10) -> Retract:
    """Retract pair for S = span of the columns of basis."""
    basis = np.asarray(basis, dtype=float)
    if basis.ndim != 2 or basis.shape[0] < 2:
        raise DimensionMismatch(f"Expected an (n+1) x k basis matrix, got {basis.shape}")
    n = basis.shape[0] - 1
    q_basis = linalg.orth(basis)
    k = q_basis.shape[1]
    if k == 0:
        raise DegenerateIntersection("Zero subspace")

    t_row = q_basis[0, :]
    t_norm2 = float(t_row @ t_row)
    if t_norm2 <= tol:
        raise DegenerateIntersection("Subspace lies in {t = 0} and meets L_n only at 0")

    gram = q_basis.T @ j_matrix(n) @ q_basis
    y_p = t_row / t_norm2
    null = linalg.null_space(t_row.reshape(1, -1), rcond=tol)
    g = null.T @ gram @ y_p
    # N^T G N = -I since Q N is orthonormal inside {t = 0}
    rho2 = float(y_p @ gram @ y_p + g @ g)
    center = q_basis @ (y_p + null @ g)

    if rho2 < -tol:
        raise DegenerateIntersection(f"Subspace meets L_n only at 0 (rho^2 = {rho2:.3e})")
    if rho2 <= tol:
        beta = center.reshape(-1, 1)
        alpha = beta.T / float(center @ center)
        logger.debug(f"Section is the single ray through {np.round(center, 6).tolist()}")
        return Retract(alpha, beta, "ray", 1, center, 0.0)

    rho = float(np.sqrt(rho2))
    frame = _aligned(q_basis @ null) * rho
    beta = np.column_stack([center, frame])
    alpha = np.linalg.pinv(beta)
    logger.debug(f"Retract of a {k}-dimensional section, radius {rho:.6f}")
    return Retract(alpha, beta, "interior", k, center, rho)
