# conekit/lorentzmaps/sampling.py
"""
Random positive maps between Lorentz cones.

Maps B (1 + Diag(v)) A with automorphisms A, B and a diagonal contraction v
are dense in every automorphism-invariant closed class, so they are the
default test population; eps e0 e0^T pushes them into the interior.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from conekit.lorentzmaps.automorphisms import random_automorphism
from conekit.lorentzmaps.sinkhorn import central_matrix


@dataclass(frozen=True)
class DressedMap:
    """matrix = b @ (1 + Diag(v)) @ a + eps e0 e0^T."""
    matrix: np.ndarray
    a: np.ndarray
    b: np.ndarray
    v: np.ndarray
    eps: float


def random_diagonal_contraction(
    n: int,
    m: int,
    rng: np.random.Generator,
    trace_bound: Optional[float] = None,
    hs_bound: Optional[float] = None,
) -> np.ndarray:
    """Diagonal of length min(n, m) with entries in (-1, 1), optionally rescaled."""
    v = rng.uniform(-1.0, 1.0, size=min(n, m))
    if trace_bound is not None:
        total = float(np.sum(np.abs(v)))
        if total > trace_bound:
            v *= trace_bound / total
    if hs_bound is not None:
        total = float(np.linalg.norm(v))
        if total > hs_bound:
            v *= hs_bound / total
    return v


def dressed_central(
    v,
    n: int,
    m: int,
    rng: np.random.Generator,
    eps: float = 0.0,
    max_boost: float = 1.0,
) -> DressedMap:
    a = random_automorphism(n, rng, max_boost=max_boost)
    b = random_automorphism(m, rng, max_boost=max_boost)
    v = np.asarray(v, dtype=float)
    matrix = b @ central_matrix(v, m, n) @ a
    matrix[0, 0] += eps
    return DressedMap(matrix=matrix, a=a, b=b, v=v, eps=eps)


def random_positive_lorentz(
    n: int,
    m: int,
    rng: np.random.Generator,
    eps: float = 0.05,
    max_boost: float = 1.0,
) -> np.ndarray:
    """Random interior Lorentz-positive map L_n -> L_m when eps > 0."""
    v = random_diagonal_contraction(n, m, rng)
    return dressed_central(v, n, m, rng, eps=eps, max_boost=max_boost).matrix


def random_central_lorentz(n: int, m: int, rng: np.random.Generator, t: float = 1.0) -> np.ndarray:
    """t (+) v with a dense v of operator norm at most t."""
    v = rng.standard_normal((m, n))
    v *= t * rng.uniform(0.0, 1.0) / max(float(np.linalg.norm(v, 2)), 1e-12)
    out = np.zeros((m + 1, n + 1))
    out[0, 0] = t
    out[1:, 1:] = v
    return out
