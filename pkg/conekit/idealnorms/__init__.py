# conekit/idealnorms/__init__.py
from conekit.idealnorms.core import (
    PietschMeasure, Gamma2Factorization, Gamma2StarCertificate,
    hs, nuclear, nuclear_lp, pi2, pietsch_measure,
    gamma2, gamma2_factorization, gamma2_star, gamma2_star_certificate,
    op_norm_ball,
)

__all__ = [
    "PietschMeasure", "Gamma2Factorization", "Gamma2StarCertificate",
    "hs", "nuclear", "nuclear_lp", "pi2", "pietsch_measure",
    "gamma2", "gamma2_factorization", "gamma2_star", "gamma2_star_certificate",
    "op_norm_ball",
]
