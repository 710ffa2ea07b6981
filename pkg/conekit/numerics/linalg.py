# conekit/numerics/linalg.py
"""
Dense linear algebra: symmetric and Hermitian matrix types, sorted
eigendecompositions and a thin SVD.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np


@dataclass(frozen=True)
class SymMatrix:
    """Real symmetric matrix, symmetrized on construction."""
    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"SymMatrix needs a square matrix, got shape {a.shape}")
        a = 0.5 * (a + a.T)
        a.setflags(write=False)
        object.__setattr__(self, 'entries', a)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class HermMatrix:
    """Complex Hermitian matrix, Hermitian part taken on construction."""
    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"HermMatrix needs a square matrix, got shape {a.shape}")
        a = 0.5 * (a + a.conj().T)
        a.setflags(write=False)
        object.__setattr__(self, 'entries', a)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def _as_sym(m) -> np.ndarray:
    if isinstance(m, SymMatrix):
        return m.entries
    return SymMatrix(m).entries


def _as_herm(m) -> np.ndarray:
    if isinstance(m, HermMatrix):
        return m.entries
    return HermMatrix(m).entries


def sym_eig(m) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and orthonormal eigenvectors of a symmetric matrix."""
    w, v = np.linalg.eigh(_as_sym(m))
    return w[::-1].copy(), v[:, ::-1].copy()


def herm_eig(m) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and unitary eigenvectors of a Hermitian matrix."""
    w, v = np.linalg.eigh(_as_herm(m))
    return w[::-1].copy(), v[:, ::-1].copy()


def svd(m) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Thin SVD returning (U, sigma, V) with M = U diag(sigma) V^T.
    Note V, not V^T.
    """
    u, s, vt = np.linalg.svd(np.asarray(m, dtype=float), full_matrices=False)
    return u, s, vt.T


def min_eig(m) -> float:
    """Smallest eigenvalue of a symmetric or Hermitian matrix."""
    a = np.asarray(m.entries if isinstance(m, (SymMatrix, HermMatrix)) else m)
    if a.size == 0:
        return 0.0
    if np.iscomplexobj(a):
        return float(np.linalg.eigvalsh(_as_herm(a))[0])
    return float(np.linalg.eigvalsh(_as_sym(a))[0])


def is_psd(m, tol: float = 1e-9) -> bool:
    """PSD up to tol * (1 + spectral norm)."""
    a = np.asarray(m.entries if isinstance(m, (SymMatrix, HermMatrix)) else m)
    scale = 1.0 + (np.linalg.norm(a, 2) if a.size else 0.0)
    return min_eig(a) >= -tol * scale


def trace_norm(m) -> float:
    """Sum of singular values."""
    return float(np.sum(np.linalg.svd(np.asarray(m), compute_uv=False)))


def orthogonal_with_first_column(a: np.ndarray) -> np.ndarray:
    """Householder reflection H (symmetric, orthogonal) with H e1 = a for a unit vector a."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    e1 = np.zeros(n)
    e1[0] = 1.0
    v = e1 - a
    vv = float(v @ v)
    if vv < 1e-30:
        return np.eye(n)
    return np.eye(n) - 2.0 * np.outer(v, v) / vv


def random_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed orthogonal matrix via QR with sign correction."""
    if n == 0:
        return np.zeros((0, 0))
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.where(np.diag(r) == 0, 1.0, np.diag(r)))
