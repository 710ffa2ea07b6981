# conekit/lorentzmaps/automorphisms.py
"""
Automorphisms of the Lorentz cone L_n.

Every automorphism has the form A = c (1 + u1) P_alpha (1 + u2) with c > 0,
u1, u2 orthogonal and P_alpha the boost in the (e0, e1) plane.
"""

import logging
from dataclasses import dataclass

import numpy as np

from conekit.cones.tensors import j_matrix
from conekit.errors import NotAutomorphism, NotInterior
from conekit.numerics.linalg import orthogonal_with_first_column, random_orthogonal, svd

logger = logging.getLogger(__name__)


def boost(n: int, alpha: float) -> np.ndarray:
    """P_alpha acting on R^{n+1}."""
    p = np.eye(n + 1)
    ch, sh = np.cosh(alpha), np.sinh(alpha)
    p[0, 0] = p[1, 1] = ch
    p[0, 1] = p[1, 0] = sh
    return p


def spatial(u: np.ndarray) -> np.ndarray:
    """1 (+) u."""
    u = np.asarray(u, dtype=float)
    out = np.eye(u.shape[0] + 1)
    out[1:, 1:] = u
    return out


@dataclass(frozen=True)
class LorentzAutomorphism:
    c: float
    u1: np.ndarray
    u2: np.ndarray
    alpha: float

    @property
    def n(self) -> int:
        return self.u1.shape[0]

    def matrix(self) -> np.ndarray:
        return self.c * spatial(self.u1) @ boost(self.n, self.alpha) @ spatial(self.u2)

    def to_dict(self) -> dict:
        return {
            'c': self.c,
            'alpha': self.alpha,
            'u1': self.u1.tolist(),
            'u2': self.u2.tolist(),
        }


def is_automorphism(a, tol: float = 1e-9) -> bool:
    try:
        decompose_automorphism(a, tol=tol)
    except NotAutomorphism:
        return False
    return True


def _polar(w: np.ndarray) -> np.ndarray:
    if w.size == 0:
        return w
    u, _, v = svd(w)
    return u @ v.T


def decompose_automorphism(a, tol: float = 1e-9) -> LorentzAutomorphism:
    """Recover (c, u1, alpha, u2) from an automorphism matrix."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 2:
        raise NotAutomorphism(f"Expected a square matrix of size >= 2, got {a.shape}")
    n = a.shape[0] - 1
    j = j_matrix(n)
    g = a.T @ j @ a
    c2 = g[0, 0]
    scale = max(1.0, float(np.linalg.norm(a, 2)) ** 2)
    if c2 <= 0 or np.linalg.norm(g - c2 * j) > tol * scale:
        raise NotAutomorphism("Matrix does not satisfy A^T J A = c^2 J")
    if a[0, 0] < 0:
        raise NotAutomorphism("Matrix maps L_n onto -L_n")

    c = float(np.sqrt(c2))
    lor = a / c
    _, sigma, _ = svd(lor)
    alpha = float(np.log(max(sigma[0], 1.0)))
    sh = np.sinh(alpha)

    if sh < 1e-9:
        # degenerate boost: the spatial block itself is the rotation
        return LorentzAutomorphism(c, _polar(lor[1:, 1:]), np.eye(n), 0.0)

    first_col = lor[1:, 0] / np.linalg.norm(lor[1:, 0])
    first_row = lor[0, 1:] / np.linalg.norm(lor[0, 1:])
    h1 = orthogonal_with_first_column(first_col)
    h2 = orthogonal_with_first_column(first_row)
    rest = (h1.T @ lor[1:, 1:] @ h2.T)[1:, 1:]
    u1 = h1 @ spatial(_polar(rest))
    result = LorentzAutomorphism(c, u1, h2.T, alpha)

    residual = float(np.linalg.norm(result.matrix() - a))
    logger.debug(f"Automorphism decomposition residual {residual:.2e}, alpha={alpha:.4f}")
    return result


def boost_to_e0(z) -> np.ndarray:
    """Automorphism (c = 1) sending an interior point z to sqrt(z^T J z) e0."""
    z = np.asarray(z, dtype=float)
    n = z.shape[0] - 1
    r = float(np.linalg.norm(z[1:]))
    if z[0] <= r:
        raise NotInterior(f"Point is not in the interior of L_{n}")
    rotation = np.eye(n + 1)
    if r > 0:
        rotation[1:, 1:] = orthogonal_with_first_column(z[1:] / r)
    return boost(n, -np.arctanh(r / z[0])) @ rotation


def random_automorphism(
    n: int,
    rng: np.random.Generator,
    max_boost: float = 1.0,
    scaled: bool = False,
) -> np.ndarray:
    """(1 + u1) P_alpha (1 + u2) with Haar rotations; times c when scaled."""
    alpha = rng.uniform(-max_boost, max_boost)
    c = float(np.exp(rng.uniform(-0.5, 0.5))) if scaled else 1.0
    u1 = random_orthogonal(n, rng)
    u2 = random_orthogonal(n, rng)
    return c * spatial(u1) @ boost(n, alpha) @ spatial(u2)
