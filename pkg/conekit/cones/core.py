# conekit/cones/core.py
"""
Cone descriptors, membership and maps between ambient spaces.

Lorentz(n)       {(t, x) in R x R^n : t >= ||x||_2}
ConeOver(X)      {(t, x) : t >= ||x||_X}
Psd(d)           d x d PSD matrices in Hermitian-basis coordinates
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from conekit.cones.hermitian import devectorize, vectorize
from conekit.errors import DimensionMismatch, UnsupportedError
from conekit.numerics.linalg import min_eig
from conekit.spaces.core import Family, SpaceDescriptor, dual_space, vec_norm

logger = logging.getLogger(__name__)


class ConeKind(Enum):
    LORENTZ = "lorentz"
    CONE_OVER = "cone_over"
    PSD = "psd"


@dataclass(frozen=True)
class ConeDescriptor:
    """A proper cone; `n` is the Lorentz dimension, the space dimension or d."""
    kind: ConeKind
    n: int
    space: Optional[SpaceDescriptor] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Cone dimension must be >= 1, got {self.n}")
        if self.kind is ConeKind.CONE_OVER:
            if self.space is None or self.space.dim != self.n:
                raise ValueError("ConeOver needs a space descriptor of matching dimension")
        elif self.space is not None:
            raise ValueError(f"{self.kind.value} cones carry no space descriptor")

    @classmethod
    def lorentz(cls, n: int) -> "ConeDescriptor":
        return cls(ConeKind.LORENTZ, n)

    @classmethod
    def over(cls, space: SpaceDescriptor) -> "ConeDescriptor":
        return cls(ConeKind.CONE_OVER, space.dim, space)

    @classmethod
    def psd(cls, d: int) -> "ConeDescriptor":
        return cls(ConeKind.PSD, d)

    @property
    def ambient_dim(self) -> int:
        if self.kind is ConeKind.PSD:
            return self.n * self.n
        return self.n + 1

    @property
    def is_lorentz_like(self) -> bool:
        """Lorentz(n) or ConeOver(l2(n))."""
        return self.kind is ConeKind.LORENTZ or (
            self.kind is ConeKind.CONE_OVER and self.space.is_euclidean
        )

    @property
    def norm_space(self) -> SpaceDescriptor:
        """The normed space whose cone this is (Lorentz(n) -> l2(n))."""
        if self.kind is ConeKind.LORENTZ:
            return SpaceDescriptor.l2(self.n)
        if self.kind is ConeKind.CONE_OVER:
            return self.space
        raise UnsupportedError("PSD cones are not cones over normed spaces")

    def to_dict(self) -> dict:
        data = {'kind': self.kind.value, 'n': self.n}
        if self.space is not None:
            data['space'] = self.space.to_dict()
        return data

    def __str__(self) -> str:
        if self.kind is ConeKind.CONE_OVER:
            return f"C[{self.space}]"
        return f"{self.kind.value}({self.n})"


def member(x, c: ConeDescriptor, tol: float = 1e-9) -> bool:
    """Membership with absolute tolerance."""
    x = np.asarray(x, dtype=float).ravel()
    if x.shape[0] != c.ambient_dim:
        raise DimensionMismatch(f"Vector of length {x.shape[0]} is not in the ambient space of {c}")
    if c.kind is ConeKind.PSD:
        return min_eig(devectorize(x)) >= -tol
    return x[0] >= vec_norm(x[1:], c.norm_space) - tol


def dual_cone(c: ConeDescriptor) -> ConeDescriptor:
    """Dual under the Euclidean pairing of ambient coordinates."""
    if c.kind is ConeKind.CONE_OVER:
        return ConeDescriptor.over(dual_space(c.space))
    return c


def random_member(c: ConeDescriptor, rng: np.random.Generator, boundary: bool = False) -> np.ndarray:
    """A random point of c; on the boundary when requested."""
    if c.kind is ConeKind.PSD:
        d = c.n
        rank = 1 if boundary else d
        g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
        return vectorize(g @ g.conj().T)
    x = rng.standard_normal(c.n)
    if c.space is not None and c.space.family is Family.LINF and boundary:
        x = np.clip(x, -1.0, 1.0)
    t = vec_norm(x, c.norm_space)
    if not boundary:
        t *= 1.0 + abs(rng.standard_normal())
    return np.concatenate([[t], x])


@dataclass(frozen=True)
class ConeMap:
    """Matrix acting from the ambient space of dom to that of cod."""
    matrix: np.ndarray
    dom: ConeDescriptor
    cod: ConeDescriptor

    def __post_init__(self):
        a = np.array(self.matrix, dtype=float)
        if a.shape != (self.cod.ambient_dim, self.dom.ambient_dim):
            raise DimensionMismatch(
                f"Matrix shape {a.shape} does not match {self.cod} <- {self.dom}"
            )
        a.setflags(write=False)
        object.__setattr__(self, 'matrix', a)

    def compose(self, inner: "ConeMap") -> "ConeMap":
        """self o inner."""
        if inner.cod.ambient_dim != self.dom.ambient_dim:
            raise DimensionMismatch(f"Cannot compose {self.dom} after {inner.cod}")
        return ConeMap(self.matrix @ inner.matrix, inner.dom, self.cod)

    def __matmul__(self, inner: "ConeMap") -> "ConeMap":
        return self.compose(inner)

    def transpose(self) -> "ConeMap":
        """P^T: dual(cod) -> dual(dom)."""
        return ConeMap(self.matrix.T, dual_cone(self.cod), dual_cone(self.dom))

    def __add__(self, other: "ConeMap") -> "ConeMap":
        if self.matrix.shape != other.matrix.shape:
            raise DimensionMismatch("Cannot add maps of different shapes")
        return ConeMap(self.matrix + other.matrix, self.dom, self.cod)

    def scaled(self, factor: float) -> "ConeMap":
        return ConeMap(factor * self.matrix, self.dom, self.cod)

    @property
    def between_lorentz(self) -> bool:
        return self.dom.is_lorentz_like and self.cod.is_lorentz_like

    def apply(self, x) -> np.ndarray:
        return self.matrix @ np.asarray(x, dtype=float)

    def to_dict(self) -> dict:
        return {
            'matrix': self.matrix.tolist(),
            'dom': self.dom.to_dict(),
            'cod': self.cod.to_dict(),
        }


def lorentz_map(matrix) -> ConeMap:
    """Wrap a (m+1) x (n+1) matrix as a map Lorentz(n) -> Lorentz(m)."""
    a = np.asarray(matrix, dtype=float)
    return ConeMap(a, ConeDescriptor.lorentz(a.shape[1] - 1), ConeDescriptor.lorentz(a.shape[0] - 1))
