# conekit/classify/factorization.py
"""
Constructive factorizations behind the 2-summing characterizations.

A Pietsch measure mu on dual-ball points f_k of X gives
    v = u2 Delta u1,   u1 x = (<f_k, x>)_k,   Delta = Diag(sqrt(mu_k)),
with u1: X -> linf^K and u2: l2^K -> l2^m contractions and ||Delta|| = pi2(v).
From it, (t (+) v) S = P Q with P = 1 (+) u2 positive and
Q = (t (+) Delta)(1 (+) u1) S max-entanglement annihilating.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from conekit.errors import UnsupportedError
from conekit.idealnorms.core import pietsch_measure
from conekit.spaces.core import OperatorMatrix, SpaceDescriptor, dual_space, vec_norm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PietschFactorization:
    """v = u2 @ diag(delta) @ u1."""
    u1: np.ndarray      # K x n, rows in the dual unit ball of the domain
    delta: np.ndarray   # K
    u2: np.ndarray      # m x K

    @property
    def width(self) -> int:
        return self.delta.shape[0]

    @property
    def delta_norm(self) -> float:
        """||Delta: linf^K -> l2^K||."""
        return float(np.linalg.norm(self.delta))

    def product(self) -> np.ndarray:
        return self.u2 @ (self.delta[:, None] * self.u1)

    def u2_norm(self) -> float:
        return float(np.linalg.norm(self.u2, 2)) if self.u2.size else 0.0


def _block(corner: float, body: np.ndarray) -> np.ndarray:
    out = np.zeros((body.shape[0] + 1, body.shape[1] + 1))
    out[0, 0] = corner
    out[1:, 1:] = body
    return out


def pietsch_factorization(
    v: OperatorMatrix,
    tol: Optional[float] = None,
    delta_reg: float = 1e-9,
) -> PietschFactorization:
    """
    Factor v: X -> l2^m through linf^K -> l2^K. For euclidean X the SVD is
    used; otherwise the optimal Pietsch measure, lifted by delta_reg times its
    mass so that u2 stays a contraction.
    """
    if not v.cod.is_euclidean:
        raise UnsupportedError(f"Pietsch factorization needs an l2 codomain, got {v.cod}")
    a = v.entries
    if v.dom.is_euclidean:
        u, s, vt = np.linalg.svd(a, full_matrices=False)
        return PietschFactorization(u1=vt, delta=s, u2=u)

    measure = pietsch_measure(v, tol=tol)
    weights = measure.weights + delta_reg * max(measure.mass, 1e-12)
    delta = np.sqrt(weights)
    u1 = measure.points
    u2 = a @ np.linalg.pinv(delta[:, None] * u1)
    result = PietschFactorization(u1=u1, delta=delta, u2=u2)
    logger.debug(
        f"Pietsch factorization width {result.width}, ||Delta||={result.delta_norm:.6f}, "
        f"||u2||={result.u2_norm():.6f}"
    )
    return result


def random_pietsch_factors(
    n: int,
    m: int,
    k: int,
    rng: np.random.Generator,
    dom: Optional[SpaceDescriptor] = None,
) -> PietschFactorization:
    """Random u1: dom -> linf^k, Delta with ||Delta|| <= 1 and u2: l2^k -> l2^m contractions."""
    dom = SpaceDescriptor.l2(n) if dom is None else dom
    u1 = rng.standard_normal((k, n))
    norms = np.array([vec_norm(row, dual_space(dom)) for row in u1])
    u1 /= np.maximum(norms, 1e-12)[:, None]
    delta = rng.uniform(0.0, 1.0, size=k)
    delta *= rng.uniform(0.2, 1.0) / np.linalg.norm(delta)
    u2 = rng.standard_normal((m, k))
    u2 /= max(float(np.linalg.norm(u2, 2)), 1e-12)
    return PietschFactorization(u1=u1, delta=delta, u2=u2)


def central_factorization(t: float, f: PietschFactorization) -> Tuple[np.ndarray, np.ndarray]:
    """
    t (+) v = P Q for v = u2 Delta u1 on l2^n with ||Delta|| <= t:
    P = 1 (+) u2 : L_K -> L_m, Q = t (+) Delta u1 : L_n -> L_K with hs(Delta u1) <= t.
    """
    p = _block(1.0, f.u2)
    q = _block(t, f.delta[:, None] * f.u1)
    return p, q


def two_summing_factorization(
    t: float,
    f: PietschFactorization,
    s: np.ndarray,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    (t (+) v) S = P Q for any positive S: L_k -> C[X]:
    P = 1 (+) u2 and Q = (t (+) Delta)(1 (+) u1) S.
    """
    s = np.asarray(s, dtype=float)
    p = _block(1.0, f.u2)
    lift = _block(1.0, f.u1)
    diag = _block(t, np.diag(f.delta))
    q = diag @ lift @ s
    return p, q


def clifford_generators(count: int) -> Tuple[np.ndarray, ...]:
    """
    count pairwise anticommuting Hermitian unitaries of size 2^ceil(count/2)
    (Jordan-Wigner).
    """
    if count < 1:
        raise ValueError(f"Need at least one generator, got {count}")
    modes = (count + 1) // 2
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    y = np.array([[0, -1j], [1j, 0]], dtype=complex)
    z = np.array([[1, 0], [0, -1]], dtype=complex)
    eye = np.eye(2, dtype=complex)
    out = []
    for mode in range(modes):
        for pauli in (x, y):
            factors = [z] * mode + [pauli] + [eye] * (modes - mode - 1)
            g = factors[0]
            for factor in factors[1:]:
                g = np.kron(g, factor)
            out.append(g)
    return tuple(out[:count])
