# conekit/lorentzmaps/extreme.py
"""
Extreme points of Pos(L_k, C[linf(n)]) with the first row (1, w^T) fixed.

Each of the n remaining rows (x_i, b_i) lies in
    K_w = {(x, b) : 1 +- x >= ||b +- w||_2}
whose extreme points are (1, w), (-1, -w) and the boundary of the
ellipsoid {(<b, w>, b) : ||b||^2 - <b, w>^2 <= 1 - ||w||^2}.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from conekit.cones.core import ConeDescriptor, ConeMap
from conekit.errors import InvalidW
from conekit.spaces.core import OperatorMatrix, SpaceDescriptor

logger = logging.getLogger(__name__)

_W_TOL = 1e-12


def _unit_rows(count: int, k: int, rng: np.random.Generator) -> np.ndarray:
    rows = rng.standard_normal((count, k))
    return rows / np.linalg.norm(rows, axis=1, keepdims=True)


def _ellipsoid_points(w: np.ndarray, count: int, rng: np.random.Generator) -> np.ndarray:
    """b on the boundary of {||b||^2 - <b, w>^2 <= 1 - ||w||^2}, one per row."""
    directions = _unit_rows(count, w.shape[0], rng)
    dots = directions @ w
    radius = np.sqrt((1.0 - w @ w) / (1.0 - dots ** 2))
    return directions * radius[:, None]


def kw_extreme_sampler(w, count: int, seed: int) -> List[Tuple[float, np.ndarray]]:
    """(1, w), (-1, -w) and count ellipsoid points (<b, w>, b)."""
    w = np.asarray(w, dtype=float)
    if np.linalg.norm(w) >= 1.0:
        raise InvalidW(f"K_w sampling needs ||w||_2 < 1, got {np.linalg.norm(w):.6f}")
    rng = np.random.default_rng(seed)
    points = [(1.0, w.copy()), (-1.0, -w.copy())]
    for b in _ellipsoid_points(w, count, rng):
        points.append((float(b @ w), b))
    return points


def in_kw(x: float, b: np.ndarray, w: np.ndarray, tol: float = 1e-10) -> bool:
    return (1.0 + x >= np.linalg.norm(b + w) - tol) and (1.0 - x >= np.linalg.norm(b - w) - tol)


def _split(n: int, n1: Optional[int], rng: np.random.Generator) -> int:
    if n1 is None:
        return int(rng.integers(0, n + 1))
    if not 0 <= n1 <= n:
        raise ValueError(f"Partition size must lie in [0, {n}], got {n1}")
    return n1


@dataclass(frozen=True)
class _Rows:
    """Rows below (1, w^T); signs[i] is +-1 for sign rows and 0 otherwise."""
    w: np.ndarray
    signs: np.ndarray
    body: np.ndarray      # n x (k+1)

    def matrix(self) -> np.ndarray:
        top = np.concatenate([[1.0], self.w])
        return np.vstack([top, self.body])


def _pos_w_rows(k: int, n: int, w: np.ndarray, rng: np.random.Generator, n1: Optional[int]) -> _Rows:
    norm_w = float(np.linalg.norm(w))
    if norm_w > 1.0 + _W_TOL:
        raise InvalidW(f"First row (1, w) needs ||w||_2 <= 1, got {norm_w:.6f}")
    if norm_w >= 1.0 - _W_TOL:
        n1 = n
    n1 = _split(n, n1, rng)

    signs = np.zeros(n)
    signs[:n1] = rng.choice((-1.0, 1.0), size=n1)
    body = np.zeros((n, k + 1))
    body[:n1, 0] = signs[:n1]
    body[:n1, 1:] = np.outer(signs[:n1], w)
    if n > n1:
        b = _ellipsoid_points(w, n - n1, rng)
        body[n1:, 0] = b @ w
        body[n1:, 1:] = b

    order = rng.permutation(n)
    return _Rows(w=w, signs=signs[order], body=body[order])


def _pos_map(rows: _Rows, k: int, n: int) -> ConeMap:
    return ConeMap(rows.matrix(), ConeDescriptor.lorentz(k), ConeDescriptor.over(SpaceDescriptor.linf(n)))


def extreme_pos0(k: int, n: int, seed: int, n1: Optional[int] = None) -> ConeMap:
    """
    Random extreme point of the dual-normalized maps Pos_0(L_k, C[linf(n)]):
    rows (1, 0), n1 sign rows (s_i, 0) and n - n1 rows (0, a_i^T) with unit a_i,
    in random order.
    """
    if k < 1 or n < 1:
        raise ValueError(f"Need k, n >= 1, got k={k}, n={n}")
    rng = np.random.default_rng(seed)
    rows = _pos_w_rows(k, n, np.zeros(k), rng, n1)
    return _pos_map(rows, k, n)


def extreme_pos_w(k: int, n: int, w, seed: int, n1: Optional[int] = None) -> ConeMap:
    """Random extreme point of Pos_w(L_k, C[linf(n)])."""
    w = np.asarray(w, dtype=float)
    if w.shape != (k,):
        raise ValueError(f"w must have length {k}, got shape {w.shape}")
    rng = np.random.default_rng(seed)
    return _pos_map(_pos_w_rows(k, n, w, rng, n1), k, n)


@dataclass(frozen=True)
class LorentzFactorizableDiag:
    """
    Q P^T for extremal Q in Pos_0(L_k, C[linf(n)]) and P in Pos_w(L_k, C[linf(m)]).
    The lower block v: l1(m) -> linf(n) is Gram-represented by
    y_i (rows of Q) and x_j (rows of P) in the unit ball of R^{k+1}.
    """
    t: float
    v: OperatorMatrix
    q: ConeMap
    p: ConeMap
    y: np.ndarray
    x: np.ndarray

    def gram_error(self) -> float:
        return float(np.max(np.abs(self.y @ self.x.T - self.v.entries), initial=0.0))


def _gram_rows(rows: _Rows, w: np.ndarray) -> np.ndarray:
    """Sign rows become s (sqrt(1 - |w|^2), w), the rest keep their spatial part."""
    head = np.sqrt(max(1.0 - float(w @ w), 0.0))
    out = np.zeros_like(rows.body)
    for i, sign in enumerate(rows.signs):
        if sign != 0.0:
            out[i, 0] = sign * head
            out[i, 1:] = sign * w
        else:
            out[i, 1:] = rows.body[i, 1:]
    return out


def lorentz_factorizable_block(
    k: int,
    n: int,
    m: int,
    seed: int,
    w=None,
) -> LorentzFactorizableDiag:
    """Build extremal Q, P and read t and v off Q P^T."""
    rng = np.random.default_rng(seed)
    if w is None:
        w = rng.standard_normal(k)
        w *= rng.uniform(0.0, 0.95) / np.linalg.norm(w)
    w = np.asarray(w, dtype=float)

    q_rows = _pos_w_rows(k, n, np.zeros(k), rng, None)
    p_rows = _pos_w_rows(k, m, w, rng, None)
    product = q_rows.matrix() @ p_rows.matrix().T
    t = float(product[0, 0])
    v = OperatorMatrix(product[1:, 1:], SpaceDescriptor.l1(m), SpaceDescriptor.linf(n))
    result = LorentzFactorizableDiag(
        t=t,
        v=v,
        q=_pos_map(q_rows, k, n),
        p=_pos_map(p_rows, k, m),
        y=_gram_rows(q_rows, w),
        x=_gram_rows(p_rows, w),
    )
    logger.debug(f"Lorentz-factorizable block with t={t:.3f}, Gram error {result.gram_error():.2e}")
    return result
