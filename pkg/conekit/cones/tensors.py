# conekit/cones/tensors.py
"""
Two-leg tensors and membership in the maximal tensor product with a
Lorentz leg.

z lies in L_n (x)max C iff the slice map f -> (f (x) id)(z) = z^T f
sends L_n into C.
"""

import logging
from dataclasses import dataclass

import numpy as np

from conekit.cones.core import ConeDescriptor, ConeKind, ConeMap, dual_cone
from conekit.errors import DimensionMismatch, UnsupportedError
from conekit.spaces.core import ball_extreme_points, dual_space

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Tensor2:
    """Element of V_A (x) V_B stored as an ambient_A x ambient_B matrix."""
    entries: np.ndarray
    leg_a: ConeDescriptor
    leg_b: ConeDescriptor

    def __post_init__(self):
        a = np.array(self.entries, dtype=float)
        if a.shape != (self.leg_a.ambient_dim, self.leg_b.ambient_dim):
            raise DimensionMismatch(
                f"Tensor shape {a.shape} does not match legs {self.leg_a}, {self.leg_b}"
            )
        a.setflags(write=False)
        object.__setattr__(self, 'entries', a)

    def swap(self) -> "Tensor2":
        return Tensor2(self.entries.T, self.leg_b, self.leg_a)

    def apply_legs(self, left: ConeMap, right: ConeMap) -> "Tensor2":
        """(left (x) right)(z)."""
        return Tensor2(left.matrix @ self.entries @ right.matrix.T, left.cod, right.cod)

    def slice_map(self) -> ConeMap:
        """f -> (f (x) id)(z), a map from dual(leg_a) to leg_b."""
        return ConeMap(self.entries.T, dual_cone(self.leg_a), self.leg_b)


def identity_tensor(n: int) -> Tensor2:
    """sum_{i=0}^n e_i (x) e_i with Lorentz(n) legs."""
    leg = ConeDescriptor.lorentz(n)
    return Tensor2(np.eye(n + 1), leg, leg)


def j_matrix(n: int) -> np.ndarray:
    return np.diag([1.0] + [-1.0] * n)


def j_map(n: int) -> ConeMap:
    """J_n = Diag(1, -1, ..., -1) as a map of Lorentz(n)."""
    leg = ConeDescriptor.lorentz(n)
    return ConeMap(j_matrix(n), leg, leg)


def j_hat(n: int) -> Tensor2:
    """e_0 (x) e_0 - sum_i e_i (x) e_i."""
    leg = ConeDescriptor.lorentz(n)
    return Tensor2(j_matrix(n), leg, leg)


def max_member_lorentz(z: Tensor2, tol: float = 1e-9) -> bool:
    """Membership of z in Lorentz (x)max C for C Lorentz or a polytope cone."""
    if not z.leg_a.is_lorentz_like:
        raise UnsupportedError(f"First leg must be a Lorentz cone, got {z.leg_a}")
    c = z.leg_b
    if c.kind is ConeKind.PSD:
        raise UnsupportedError("PSD second legs are not supported")
    if c.is_lorentz_like:
        from conekit.lorentzmaps.positivity import is_lorentz_positive
        return is_lorentz_positive(z.slice_map(), tol=tol)

    # the dual of C_X is generated by the rays (1, g), g extreme in the dual ball
    scale = 1.0 + float(np.linalg.norm(z.entries, 2))
    for g in ball_extreme_points(dual_space(c.space)):
        h = z.entries @ np.concatenate([[1.0], g])
        if h[0] < np.linalg.norm(h[1:]) - tol * scale:
            logger.debug(f"Slice functional {g} leaves the Lorentz cone")
            return False
    return True
