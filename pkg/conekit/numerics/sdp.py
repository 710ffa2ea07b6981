# conekit/numerics/sdp.py
"""
Small dense semidefinite programs.

Problems are modelled with cvxpy and solved by the Clarabel interior-point
solver, which is deterministic for identical input. `sdp_solve` accepts the
standard form min c^T y s.t. F0 + sum_i y_i F_i >= 0 (one or more blocks);
higher modules build cvxpy models directly and share `solve_model`.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

import cvxpy as cp
import numpy as np

from conekit.config import get_config
from conekit.errors import DimensionTooLarge, SolverError
from conekit.numerics.linalg import min_eig

logger = logging.getLogger(__name__)


class SdpStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    MAX_ITERATIONS = "max_iterations"


_STATUS_MAP = {
    cp.OPTIMAL: SdpStatus.OPTIMAL,
    cp.OPTIMAL_INACCURATE: SdpStatus.OPTIMAL,
    cp.INFEASIBLE: SdpStatus.INFEASIBLE,
    cp.INFEASIBLE_INACCURATE: SdpStatus.INFEASIBLE,
    # a dual infeasibility certificate; callers only see the trichotomy
    cp.UNBOUNDED: SdpStatus.INFEASIBLE,
    cp.UNBOUNDED_INACCURATE: SdpStatus.INFEASIBLE,
}


@dataclass(frozen=True)
class SdpBlock:
    """One affine matrix constraint F0 + sum_i y_i F_i >= 0."""
    f0: np.ndarray
    fs: Tuple[np.ndarray, ...]

    def __post_init__(self):
        f0 = np.asarray(self.f0, dtype=float)
        fs = tuple(np.asarray(f, dtype=float) for f in self.fs)
        for f in (f0,) + fs:
            if f.shape != f0.shape or f.ndim != 2 or f.shape[0] != f.shape[1]:
                raise ValueError("SDP block matrices must be square with equal shapes")
            if not np.allclose(f, f.T, atol=1e-12):
                raise ValueError("SDP block matrices must be symmetric")
        object.__setattr__(self, 'f0', f0)
        object.__setattr__(self, 'fs', fs)

    @property
    def dim(self) -> int:
        return self.f0.shape[0]


@dataclass(frozen=True)
class SdpProblem:
    """min c^T y subject to every block being positive semidefinite."""
    objective: np.ndarray
    blocks: Tuple[SdpBlock, ...]

    def __post_init__(self):
        c = np.asarray(self.objective, dtype=float).ravel()
        object.__setattr__(self, 'objective', c)
        object.__setattr__(self, 'blocks', tuple(self.blocks))
        if c.shape[0] == 0:
            raise ValueError("SdpProblem needs at least one variable")
        if not self.blocks:
            raise ValueError("SdpProblem needs at least one block")
        for block in self.blocks:
            if len(block.fs) != c.shape[0]:
                raise ValueError(
                    f"Block has {len(block.fs)} coefficient matrices, objective has {c.shape[0]}"
                )
        total = sum(b.dim for b in self.blocks)
        cap = get_config().sdp_block_cap
        if total > cap:
            raise DimensionTooLarge(f"Total SDP block dimension {total} exceeds {cap}")


@dataclass(frozen=True)
class SdpSolution:
    status: SdpStatus
    value: float
    point: np.ndarray
    psd_slack: float

    def __post_init__(self):
        if self.status is SdpStatus.OPTIMAL and self.psd_slack < -get_config().tol_psd:
            raise ValueError(f"Optimal solution with PSD slack {self.psd_slack:.2e}")

    @property
    def optimal(self) -> bool:
        return self.status is SdpStatus.OPTIMAL

    def require_optimal(self, what: str) -> float:
        """Value of an optimal solution, SolverError otherwise."""
        if not self.optimal:
            raise SolverError(f"{what}: solver finished with status {self.status.value}")
        return self.value


def check_block_size(total: int, what: str) -> None:
    cap = get_config().sdp_block_cap
    if total > cap:
        raise DimensionTooLarge(f"{what}: SDP block dimension {total} exceeds {cap}")


def solve_model(
    problem: cp.Problem,
    psd_exprs: Sequence[cp.Expression] = (),
    variables: Sequence[cp.Variable] = (),
    tol: Optional[float] = None,
    max_iter: Optional[int] = None,
) -> SdpSolution:
    """
    Solve a cvxpy model with Clarabel and map the outcome to SdpSolution.
    An optimum whose psd_exprs violate PSD beyond tol_psd is reported as
    MAX_ITERATIONS.
    """
    config = get_config()
    tol = config.solver_tol if tol is None else tol
    max_iter = config.sdp_max_iter if max_iter is None else max_iter
    eps = max(min(tol * 1e-2, 1e-8), 1e-12)

    try:
        problem.solve(
            solver=cp.CLARABEL,
            max_iter=max_iter,
            tol_gap_abs=eps,
            tol_gap_rel=eps,
            tol_feas=eps,
        )
    except cp.error.SolverError as exc:
        logger.warning(f"Clarabel failed: {exc}")
        return SdpSolution(SdpStatus.MAX_ITERATIONS, float('nan'), np.zeros(0), float('nan'))

    status = _STATUS_MAP.get(problem.status, SdpStatus.MAX_ITERATIONS)
    logger.debug(f"SDP status {problem.status}, value {problem.value}")

    if status is not SdpStatus.OPTIMAL:
        return SdpSolution(status, float('nan'), np.zeros(0), float('nan'))

    point = (
        np.concatenate([np.ravel(v.value) for v in variables])
        if variables else np.zeros(0)
    )
    slack = psd_slack([np.asarray(e.value, dtype=float) for e in psd_exprs])
    if slack < -config.tol_psd:
        logger.warning(f"Clarabel returned {problem.status} with PSD slack {slack:.2e}; treating as not converged")
        return SdpSolution(SdpStatus.MAX_ITERATIONS, float('nan'), point, slack)
    if problem.status == cp.OPTIMAL_INACCURATE:
        logger.warning("Clarabel reported an inaccurate optimum; PSD slack is within tolerance")
    return SdpSolution(status, float(problem.value), point, slack)


def psd_slack(blocks: Sequence[np.ndarray]) -> float:
    """Smallest min_eig(M) / (1 + ||M||_2) over the blocks; 0 for no blocks."""
    slacks = [min_eig(m) / (1.0 + float(np.linalg.norm(m, 2))) for m in blocks]
    return float(min(slacks)) if slacks else 0.0


def sdp_solve(
    p: SdpProblem,
    tol: Optional[float] = None,
    max_iter: Optional[int] = None,
) -> SdpSolution:
    """Solve a standard-form SdpProblem."""
    m = p.objective.shape[0]
    y = cp.Variable(m)
    constraints = []
    psd_exprs = []
    for block in p.blocks:
        z = cp.Variable((block.dim, block.dim), symmetric=True)
        affine = cp.Constant(block.f0)
        for i, f in enumerate(block.fs):
            affine = affine + y[i] * f
        constraints += [z >> 0, z == affine]
        psd_exprs.append(z)

    problem = cp.Problem(cp.Minimize(p.objective @ y), constraints)
    return solve_model(problem, psd_exprs, [y], tol=tol, max_iter=max_iter)
