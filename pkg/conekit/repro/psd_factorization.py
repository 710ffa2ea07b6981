# conekit/repro/psd_factorization.py
"""
beta^* (1 (+) v) alpha is completely positive whenever gamma2*(v) <= 1, for
alpha: Psd(n) -> C[linf k1] and beta: Psd(m) -> C[linf k2] given by
operators A_0 +- A_i >= 0 and B_0 +- B_j >= 0. Its Choi matrix is
    C = A_0 (x) B_0 + sum_ij v_ji A_i (x) B_j.
At gamma2*(v) > 1 the bound is sharp: Clifford realizations of the optimal
Gram vectors give <Phi|C|Phi> = 1 - gamma2*(v) on the maximally entangled Phi.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy import linalg

from conekit.classify.factorization import clifford_generators
from conekit.config import get_config
from conekit.idealnorms.core import gamma2_star, gamma2_star_certificate
from conekit.numerics.linalg import min_eig
from conekit.repro.report import ReproReport
from conekit.spaces.core import OperatorMatrix, SpaceDescriptor

logger = logging.getLogger(__name__)

PSD_TOL = 1e-8
ACTIVE_SCALE = 1.5
CLIFFORD_EVERY = 10
DEFAULT_TRIALS = 200
ACTIVE_TRIALS = 1000
MAX_DIM = 3


@dataclass(frozen=True)
class PsdFactorizationDraw:
    """Operators of alpha and beta and the middle map v: linf(k1) -> l1(k2)."""
    a: Sequence[np.ndarray]    # A_0, A_1..A_k1
    b: Sequence[np.ndarray]    # B_0, B_1..B_k2
    v: np.ndarray              # k2 x k1

    def choi(self) -> np.ndarray:
        out = np.kron(self.a[0], self.b[0])
        for j in range(self.v.shape[0]):
            for i in range(self.v.shape[1]):
                out = out + self.v[j, i] * np.kron(self.a[i + 1], self.b[j + 1])
        return out

    def min_eig(self) -> float:
        return min_eig(self.choi())


def _hermitian_contraction(d: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    h = g + g.conj().T
    return h * rng.uniform(0.5, 1.0) / np.linalg.norm(h, 2)


def random_operator_family(d: int, k: int, rng: np.random.Generator):
    """A_0 > 0 and A_i = A_0^{1/2} C_i A_0^{1/2} with Hermitian contractions C_i."""
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    a0 = g @ g.conj().T + 0.1 * np.eye(d)
    a0 /= np.trace(a0).real
    root = linalg.sqrtm(a0)
    return [a0] + [root @ _hermitian_contraction(d, rng) @ root for _ in range(k)]


def _middle_map(k1: int, k2: int, rng: np.random.Generator) -> OperatorMatrix:
    return OperatorMatrix(rng.standard_normal((k2, k1)), SpaceDescriptor.linf(k1), SpaceDescriptor.l1(k2))


def random_draw(rng: np.random.Generator, scale: float) -> PsdFactorizationDraw:
    """Random alpha, beta and v rescaled to gamma2*(v) = scale."""
    n, m = (int(x) for x in rng.integers(1, MAX_DIM + 1, size=2))
    k1, k2 = (int(x) for x in rng.integers(1, MAX_DIM + 1, size=2))
    v = _middle_map(k1, k2, rng)
    value = gamma2_star(v)
    entries = v.entries * (scale / value) if value > 0 else v.entries
    return PsdFactorizationDraw(
        a=random_operator_family(n, k1, rng),
        b=random_operator_family(m, k2, rng),
        v=entries,
    )


def clifford_draw(rng: np.random.Generator, scale: float, k1: int = 2, k2: int = 2) -> PsdFactorizationDraw:
    """
    A_i = sum_r y_i[r] G_r and B_j = -sum_r x_j[r] G_r^T from the optimal Gram
    vectors of gamma2*(v), with anticommuting G_r and A_0 = B_0 = I.
    """
    v = _middle_map(k1, k2, rng)
    cert = gamma2_star_certificate(v)
    y, x = cert.gram.functional_vectors, cert.gram.point_vectors
    gens = clifford_generators(y.shape[1])
    d = gens[0].shape[0]
    a = [np.eye(d, dtype=complex)] + [sum(c * g for c, g in zip(row, gens)) for row in y]
    b = [np.eye(d, dtype=complex)] + [-sum(c * g.T for c, g in zip(row, gens)) for row in x]
    return PsdFactorizationDraw(a=a, b=b, v=v.entries * (scale / cert.value))


def maximally_entangled_value(draw: PsdFactorizationDraw) -> float:
    d = draw.a[0].shape[0]
    phi = np.eye(d).reshape(-1) / np.sqrt(d)
    return float(np.real(phi.conj() @ draw.choi() @ phi))


def psd_factorization_check(
    trials: int = DEFAULT_TRIALS,
    seed: Optional[int] = None,
    active_trials: int = ACTIVE_TRIALS,
) -> ReproReport:
    seed = get_config().seed if seed is None else seed
    report = ReproReport("psd-factorization", seed=seed, inputs={'trials': trials, 'active_trials': active_trials})
    rng = np.random.default_rng([seed, 0])

    zero = PsdFactorizationDraw(
        a=random_operator_family(2, 2, rng), b=random_operator_family(2, 2, rng), v=np.zeros((2, 2)),
    )
    report.at_least("v = 0 gives the product A_0 (x) B_0", 0.0, zero.min_eig(), PSD_TOL, anchor="degenerate case")

    worst = min(random_draw(rng, rng.uniform(0.5, 1.0 - 1e-4)).min_eig() for _ in range(trials))
    report.at_least("Choi matrix is PSD when gamma2*(v) <= 1", 0.0, worst, PSD_TOL,
                    anchor="the composition is entanglement breaking")

    violations = 0
    entangled = None
    for i in range(active_trials):
        if i % CLIFFORD_EVERY == 0:
            draw = clifford_draw(rng, ACTIVE_SCALE)
            if entangled is None:
                entangled = maximally_entangled_value(draw)
        else:
            draw = random_draw(rng, ACTIVE_SCALE)
        if draw.min_eig() < -PSD_TOL:
            violations += 1
    report.at_least(f"violations at gamma2*(v) = {ACTIVE_SCALE}", 1, violations, anchor="the threshold is active")
    if entangled is not None:
        report.close("<Phi|C|Phi> = 1 - gamma2*(v)", 1.0 - ACTIVE_SCALE, entangled, 1e-5,
                     anchor="Clifford realization of the gamma2* Gram vectors")
    logger.info(f"PSD factorization: worst eigenvalue {worst:.2e}, {violations} violations above threshold")
    return report
