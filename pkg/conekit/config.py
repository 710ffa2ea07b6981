# conekit/config.py
"""
Numerical defaults shared by every module.
Operations take explicit keyword arguments; these are only their defaults.
"""

import os
from dataclasses import dataclass, field
from typing import Tuple

SEED_ENV_VAR = "CONEKIT_SEED"


def _seed_from_env() -> int:
    raw = os.environ.get(SEED_ENV_VAR, "0")
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}")


@dataclass(frozen=True)
class ConekitConfig:
    """Tolerances, caps and iteration limits."""
    tol_psd: float = 1e-9            # min-eigenvalue slack for PSD membership
    solver_tol: float = 1e-7         # accuracy contract of SDP values
    threshold_tol: float = 1e-6      # guard band for norm <= lambda verdicts
    sdp_max_iter: int = 500
    sinkhorn_tol: float = 1e-12
    sinkhorn_max_iter: int = 10000
    linf_enum_cap: int = 14          # sign vectors of linf balls
    pi2_l1_cap: int = 12             # Pietsch measure over sign vectors
    sdp_block_cap: int = 64
    eb_eps_schedule: Tuple[float, ...] = (1e-3, 1e-4, 1e-5)
    seed: int = field(default_factory=_seed_from_env)

    def __post_init__(self):
        if self.tol_psd <= 0 or self.solver_tol <= 0 or self.threshold_tol <= 0:
            raise ValueError("Tolerances must be positive")
        if self.sdp_max_iter < 1 or self.sinkhorn_max_iter < 1:
            raise ValueError("Iteration caps must be >= 1")
        if not self.eb_eps_schedule or min(self.eb_eps_schedule) <= 0:
            raise ValueError("eb_eps_schedule must hold positive values")


_DEFAULT = ConekitConfig()


def get_config() -> ConekitConfig:
    """Process-wide default configuration."""
    return _DEFAULT
