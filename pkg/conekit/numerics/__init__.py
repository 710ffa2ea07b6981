# conekit/numerics/__init__.py
from conekit.numerics.linalg import (
    SymMatrix, HermMatrix, sym_eig, herm_eig, svd, min_eig, is_psd, trace_norm,
)
from conekit.numerics.sdp import (
    SdpStatus, SdpBlock, SdpProblem, SdpSolution, sdp_solve, solve_model,
)

__all__ = [
    "SymMatrix", "HermMatrix", "sym_eig", "herm_eig", "svd", "min_eig", "is_psd",
    "trace_norm", "SdpStatus", "SdpBlock", "SdpProblem", "SdpSolution",
    "sdp_solve", "solve_model",
]
