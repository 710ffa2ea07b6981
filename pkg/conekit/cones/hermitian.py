# conekit/cones/hermitian.py
"""
Real coordinates for Hermitian matrices.

Herm(d) is identified with R^{d^2} through an orthonormal basis for the
trace inner product: I/sqrt(d), then symmetric and antisymmetric
off-diagonal generalized Gell-Mann matrices, then the diagonal ones.
For d = 2 the basis is (I, s1, s2, s3)/sqrt(2).
"""

from functools import lru_cache
from typing import Callable, Sequence, Tuple

import numpy as np

from conekit.numerics.linalg import HermMatrix

PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@lru_cache(maxsize=None)
def hermitian_basis(d: int) -> Tuple[np.ndarray, ...]:
    """Orthonormal basis of Herm(d), read-only arrays."""
    if d < 1:
        raise ValueError(f"Matrix dimension must be >= 1, got {d}")
    basis = [np.eye(d, dtype=complex) / np.sqrt(d)]
    pairs = [(j, k) for j in range(d) for k in range(j + 1, d)]
    for j, k in pairs:
        e = np.zeros((d, d), dtype=complex)
        e[j, k] = e[k, j] = 1.0 / np.sqrt(2.0)
        basis.append(e)
    for j, k in pairs:
        e = np.zeros((d, d), dtype=complex)
        e[j, k] = -1j / np.sqrt(2.0)
        e[k, j] = 1j / np.sqrt(2.0)
        basis.append(e)
    for level in range(1, d):
        diag = np.zeros(d)
        diag[:level] = 1.0
        diag[level] = -float(level)
        basis.append(np.diag(diag / np.sqrt(level * (level + 1))).astype(complex))
    for e in basis:
        e.setflags(write=False)
    return tuple(basis)


def vectorize(h) -> np.ndarray:
    """Coordinates Tr(E_a H) of a Hermitian matrix."""
    a = h.entries if isinstance(h, HermMatrix) else np.asarray(h, dtype=complex)
    d = a.shape[0]
    return np.array([np.real(np.trace(e @ a)) for e in hermitian_basis(d)])


def devectorize(x) -> np.ndarray:
    """Hermitian matrix sum_a x_a E_a."""
    x = np.asarray(x, dtype=float).ravel()
    d = int(round(np.sqrt(x.shape[0])))
    if d * d != x.shape[0]:
        raise ValueError(f"Length {x.shape[0]} is not a perfect square")
    return sum((xa * e for xa, e in zip(x, hermitian_basis(d))), np.zeros((d, d), dtype=complex))


def superoperator_from_map(fn: Callable[[np.ndarray], np.ndarray], d_in: int, d_out: int) -> np.ndarray:
    """Real d_out^2 x d_in^2 matrix of a Hermiticity-preserving linear map."""
    columns = [vectorize(fn(e)) for e in hermitian_basis(d_in)]
    out = np.column_stack(columns) if columns else np.zeros((d_out * d_out, 0))
    if out.shape[0] != d_out * d_out:
        raise ValueError(f"Map output has dimension {out.shape[0]}, expected {d_out * d_out}")
    return out


def kraus_apply(kraus: Sequence[np.ndarray], x: np.ndarray, weights=None) -> np.ndarray:
    weights = [1.0] * len(kraus) if weights is None else weights
    return sum(w * k @ x @ k.conj().T for w, k in zip(weights, kraus))


def superoperator(kraus: Sequence[np.ndarray], weights=None) -> np.ndarray:
    """Real matrix of X -> sum_i w_i K_i X K_i^dagger."""
    kraus = [np.asarray(k, dtype=complex) for k in kraus]
    d_out, d_in = kraus[0].shape
    return superoperator_from_map(lambda x: kraus_apply(kraus, x, weights), d_in, d_out)


def choi_matrix(kraus: Sequence[np.ndarray], weights=None) -> np.ndarray:
    """sum_ij E_ij (x) T(E_ij) for T(X) = sum_i w_i K_i X K_i^dagger."""
    kraus = [np.asarray(k, dtype=complex) for k in kraus]
    d_out, d_in = kraus[0].shape
    choi = np.zeros((d_in * d_out, d_in * d_out), dtype=complex)
    for i in range(d_in):
        for j in range(d_in):
            e = np.zeros((d_in, d_in), dtype=complex)
            e[i, j] = 1.0
            choi += np.kron(e, kraus_apply(kraus, e, weights))
    return choi


def partial_transpose(rho: np.ndarray, dims: Tuple[int, int], system: int = 1) -> np.ndarray:
    """Partial transpose of a bipartite operator on subsystem 0 or 1."""
    d1, d2 = dims
    t = np.asarray(rho).reshape(d1, d2, d1, d2)
    if system == 0:
        t = t.transpose(2, 1, 0, 3)
    elif system == 1:
        t = t.transpose(0, 3, 2, 1)
    else:
        raise ValueError(f"system must be 0 or 1, got {system}")
    return t.reshape(d1 * d2, d1 * d2)


def bloch_iso() -> Tuple[Callable[[np.ndarray], HermMatrix], Callable[[HermMatrix], np.ndarray]]:
    """
    (t, x, y, z) -> (t I + x s1 + y s2 + z s3) / 2 and its inverse.
    Maps the Lorentz cone L_3 onto the PSD cone of 2x2 matrices.
    """
    def forward(v) -> HermMatrix:
        v = np.asarray(v, dtype=float).ravel()
        if v.shape[0] != 4:
            raise ValueError(f"Bloch coordinates need 4 entries, got {v.shape[0]}")
        return HermMatrix(0.5 * sum(c * p for c, p in zip(v, PAULI)))

    def inverse(h) -> np.ndarray:
        a = h.entries if isinstance(h, HermMatrix) else np.asarray(h, dtype=complex)
        return np.array([np.real(np.trace(p @ a)) for p in PAULI])

    return forward, inverse


def bloch_matrix() -> np.ndarray:
    """
    The Bloch map L_3 -> Psd(2) in Hermitian-basis coordinates.
    With the (I, s1, s2, s3)/sqrt(2) basis this is I_4 / sqrt(2).
    """
    forward, _ = bloch_iso()
    return np.column_stack([vectorize(forward(e)) for e in np.eye(4)])
