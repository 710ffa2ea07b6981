# conekit/spaces/core.py
"""
Finite-dimensional spaces l1^n, l2^n, linf^n and operator norms between them.

Polytope balls (l1, linf) are handled by exact enumeration of extreme
points; the euclidean ball by singular values.
"""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

import numpy as np

from conekit.config import get_config
from conekit.errors import DimensionMismatch, DimensionTooLarge, UnsupportedError

logger = logging.getLogger(__name__)


class Family(Enum):
    L1 = "l1"
    L2 = "l2"
    LINF = "linf"


_DUAL_FAMILY = {Family.L1: Family.LINF, Family.L2: Family.L2, Family.LINF: Family.L1}


@dataclass(frozen=True)
class SpaceDescriptor:
    """The space (R^dim, ||.||_p) for p in {1, 2, inf}."""
    family: Family
    dim: int

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, 'family', Family(self.family))
        if int(self.dim) < 1:
            raise ValueError(f"Space dimension must be >= 1, got {self.dim}")
        object.__setattr__(self, 'dim', int(self.dim))

    @classmethod
    def l1(cls, n: int) -> "SpaceDescriptor":
        return cls(Family.L1, n)

    @classmethod
    def l2(cls, n: int) -> "SpaceDescriptor":
        return cls(Family.L2, n)

    @classmethod
    def linf(cls, n: int) -> "SpaceDescriptor":
        return cls(Family.LINF, n)

    @property
    def is_euclidean(self) -> bool:
        return self.family is Family.L2

    @property
    def is_polytope(self) -> bool:
        return self.family is not Family.L2

    def to_dict(self) -> dict:
        return {'family': self.family.value, 'dim': self.dim}

    @classmethod
    def from_dict(cls, data: dict) -> "SpaceDescriptor":
        return cls(Family(data['family']), int(data['dim']))

    def __str__(self) -> str:
        return f"{self.family.value}({self.dim})"


@dataclass(frozen=True)
class OperatorMatrix:
    """A linear map u: dom -> cod stored as a cod.dim x dom.dim matrix."""
    entries: np.ndarray
    dom: SpaceDescriptor
    cod: SpaceDescriptor

    def __post_init__(self):
        a = np.array(self.entries, dtype=float)
        if a.ndim == 1 and self.cod.dim == 1:
            a = a.reshape(1, -1)
        if a.shape != (self.cod.dim, self.dom.dim):
            raise DimensionMismatch(
                f"Matrix shape {a.shape} does not match {self.cod} <- {self.dom}"
            )
        a.setflags(write=False)
        object.__setattr__(self, 'entries', a)

    @property
    def shape(self):
        return self.entries.shape

    def adjoint(self) -> "OperatorMatrix":
        """u^T: dual(cod) -> dual(dom)."""
        return OperatorMatrix(self.entries.T, dual_space(self.cod), dual_space(self.dom))

    def compose(self, inner: "OperatorMatrix") -> "OperatorMatrix":
        """self o inner; the inner codomain must be the outer domain."""
        if inner.cod != self.dom:
            raise DimensionMismatch(f"Cannot compose {self.dom} with codomain {inner.cod}")
        return OperatorMatrix(self.entries @ inner.entries, inner.dom, self.cod)

    def scaled(self, factor: float) -> "OperatorMatrix":
        return OperatorMatrix(factor * self.entries, self.dom, self.cod)

    def with_spaces(self, dom: SpaceDescriptor, cod: SpaceDescriptor) -> "OperatorMatrix":
        return OperatorMatrix(self.entries, dom, cod)


def vec_norm(x, s: SpaceDescriptor) -> float:
    """||x||_1, ||x||_2 or ||x||_inf according to s."""
    x = np.asarray(x, dtype=float).ravel()
    if x.shape[0] != s.dim:
        raise DimensionMismatch(f"Vector of length {x.shape[0]} is not in {s}")
    if s.family is Family.L1:
        return float(np.sum(np.abs(x)))
    if s.family is Family.L2:
        return float(np.linalg.norm(x))
    return float(np.max(np.abs(x)))


def dual_space(s: SpaceDescriptor) -> SpaceDescriptor:
    return SpaceDescriptor(_DUAL_FAMILY[s.family], s.dim)


def _check_enum_cap(s: SpaceDescriptor, cap: Optional[int]) -> None:
    cap = get_config().linf_enum_cap if cap is None else cap
    if s.family is Family.LINF and s.dim > cap:
        raise DimensionTooLarge(f"Sign enumeration of {s} exceeds cap 2^{cap}")


def ball_extreme_points(s: SpaceDescriptor, cap: Optional[int] = None) -> List[np.ndarray]:
    """Extreme points of the unit ball: {+-e_i} for l1, all sign vectors for linf."""
    if s.family is Family.L2:
        raise UnsupportedError("The euclidean ball has a continuum of extreme points")
    if s.family is Family.L1:
        eye = np.eye(s.dim)
        return [sign * eye[i] for i in range(s.dim) for sign in (1.0, -1.0)]
    _check_enum_cap(s, cap)
    return [np.array(signs, dtype=float)
            for signs in itertools.product((1.0, -1.0), repeat=s.dim)]


def symmetric_extreme_points(s: SpaceDescriptor, cap: Optional[int] = None) -> np.ndarray:
    """
    One extreme point from each +- pair, as rows of a matrix.
    l1: e_1..e_n; linf: sign vectors with first entry +1.
    """
    if s.family is Family.L2:
        raise UnsupportedError("The euclidean ball has a continuum of extreme points")
    if s.family is Family.L1:
        return np.eye(s.dim)
    _check_enum_cap(s, cap)
    rows = [(1.0,) + signs for signs in itertools.product((1.0, -1.0), repeat=s.dim - 1)]
    return np.array(rows, dtype=float)


def op_norm(u: OperatorMatrix, cap: Optional[int] = None) -> float:
    """Exact operator norm ||u: dom -> cod||."""
    a = u.entries
    dom, cod = u.dom, u.cod
    if dom.family is Family.L1:
        return max(vec_norm(a[:, j], cod) for j in range(dom.dim))
    if dom.family is Family.L2:
        if cod.family is Family.L2:
            return float(np.linalg.norm(a, 2)) if a.size else 0.0
        # sup over the dual-ball extreme points f of ||u^T f||_2
        f = symmetric_extreme_points(dual_space(cod), cap)
        return float(np.max(np.linalg.norm(f @ a, axis=1)))
    # linf domain
    if cod.family is Family.LINF:
        return float(np.max(np.sum(np.abs(a), axis=1)))
    signs = symmetric_extreme_points(dom, cap)
    return max(vec_norm(a @ s, cod) for s in signs)
