# conekit/classify/central.py
"""
Class verdicts for central maps lam (+) u : (t, x) -> (lam t, u x).

Every class is decided by comparing one ideal norm of u with lam:

    Positive          op_norm(u)     <= lam
    EB                nuclear(u)     <= lam
    LorFact           gamma2(u)      <= lam
    LorEB             gamma2_star(u) <= lam
    LorEAIntoLorentz  pi2(u)         <= lam    (euclidean codomain)
    MaxEA             hs(u)          <= lam    (euclidean endpoints)
                      alpha(u)       <= lam    (linf(2) -> l2)
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Optional

import numpy as np

from conekit.config import get_config
from conekit.cones.core import ConeDescriptor, ConeMap
from conekit.errors import DimensionTooLarge, NotPositive, UnsupportedError
from conekit.idealnorms.core import gamma2, gamma2_star, hs, nuclear, pi2
from conekit.lorentzmaps.criteria import is_eb_lorentz
from conekit.spaces.core import Family, OperatorMatrix, SpaceDescriptor, op_norm

logger = logging.getLogger(__name__)


class MapClass(Enum):
    POSITIVE = "Positive"
    EB = "EB"
    LOR_FACT = "LorFact"
    LOR_EB = "LorEB"
    LOR_EA_INTO_LORENTZ = "LorEAIntoLorentz"
    MAX_EA = "MaxEA"


class Verdict(Enum):
    TRUE = "True"
    FALSE = "False"
    UNSUPPORTED = "Unsupported"


ANCHORS = {
    MapClass.POSITIVE: "lam (+) u is positive iff op_norm(u) <= lam",
    MapClass.EB: "lam (+) u is entanglement breaking iff Nuc(u) <= lam",
    MapClass.LOR_FACT: "lam (+) u factors through a Lorentz cone iff gamma2(u) <= lam",
    MapClass.LOR_EB: "lam (+) u is Lorentz-entanglement breaking iff gamma2*(u) <= lam",
    MapClass.LOR_EA_INTO_LORENTZ: "lam (+) u into a Lorentz cone is Lorentz-EA iff pi2(u) <= lam",
    MapClass.MAX_EA: "lam (+) u between Lorentz cones is maxEA iff hs(u) <= lam",
}

SQUARE_ANCHOR = "lam (+) phi on the square cone is maxEA iff alpha(phi) <= lam"

# the four sign patterns of non-separable extreme rays of C[linf2] (x)max C[linf2]
SQUARE_H = (
    np.array([[-1.0, 1.0], [1.0, 1.0]]),
    np.array([[1.0, -1.0], [1.0, 1.0]]),
    np.array([[1.0, 1.0], [-1.0, 1.0]]),
    np.array([[1.0, 1.0], [1.0, -1.0]]),
)


@dataclass(frozen=True)
class CentralMap:
    lam: float
    u: OperatorMatrix

    def to_cone_map(self) -> ConeMap:
        matrix = np.zeros((self.u.cod.dim + 1, self.u.dom.dim + 1))
        matrix[0, 0] = self.lam
        matrix[1:, 1:] = self.u.entries
        return ConeMap(matrix, ConeDescriptor.over(self.u.dom), ConeDescriptor.over(self.u.cod))

    def to_dict(self) -> dict:
        return {
            'lambda': self.lam,
            'matrix': self.u.entries.tolist(),
            'dom': self.u.dom.to_dict(),
            'cod': self.u.cod.to_dict(),
        }


@dataclass(frozen=True)
class ClassResult:
    map_class: MapClass
    verdict: Verdict
    value: Optional[float]
    threshold: float
    tolerance: float
    anchor: str
    note: str = ""

    def __post_init__(self):
        if self.verdict is Verdict.TRUE and self.value is not None:
            if self.value > self.threshold + self.tolerance:
                raise ValueError(f"{self.map_class.value}: value {self.value} exceeds threshold")

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.TRUE

    def to_dict(self) -> dict:
        data = {
            'class': self.map_class.value,
            'verdict': self.verdict.value,
            'value': self.value,
            'threshold': self.threshold,
            'tolerance': self.tolerance,
            'pass': self.passed,
            'paper_anchor': self.anchor,
        }
        if self.note:
            data['note'] = self.note
        return data


@dataclass
class ClassificationReport:
    central: CentralMap
    results: Dict[MapClass, ClassResult] = field(default_factory=dict)

    def verdict(self, map_class: MapClass) -> Verdict:
        return self.results[map_class].verdict

    def value(self, map_class: MapClass) -> Optional[float]:
        return self.results[map_class].value

    def to_dict(self) -> dict:
        return {
            'map': self.central.to_dict(),
            'results': [self.results[c].to_dict() for c in MapClass if c in self.results],
        }


def alpha_square(phi) -> float:
    """
    Least lam with lam (+) phi in maxEA2(C[linf2], L_k): the larger of the
    operator norm ||phi: linf2 -> l2|| and max_H sqrt(||phi H phi^T||_1).
    """
    phi = np.asarray(phi, dtype=float)
    if phi.ndim != 2 or phi.shape[1] != 2:
        raise UnsupportedError(f"alpha is defined for maps out of linf(2), got shape {phi.shape}")
    c1, c2 = phi[:, 0], phi[:, 1]
    candidates = [np.linalg.norm(c1 + c2), np.linalg.norm(c1 - c2)]
    for h in SQUARE_H:
        trace = np.sum(np.linalg.svd(phi @ h @ phi.T, compute_uv=False))
        candidates.append(np.sqrt(trace))
    return float(max(candidates))


def square_max_ea_central(lam: float, phi, tol: Optional[float] = None) -> bool:
    """
    lam (+) phi in maxEA2(C[linf2], L_k) iff phi is a contraction into l2 scaled
    by lam and every lam^2 (+) phi H phi^T is EB between Lorentz cones.
    """
    tol = get_config().threshold_tol if tol is None else tol
    phi = np.asarray(phi, dtype=float)
    k = phi.shape[0]
    u = OperatorMatrix(phi, SpaceDescriptor.linf(2), SpaceDescriptor.l2(k))
    if op_norm(u) > lam + tol:
        return False
    for h in SQUARE_H:
        matrix = np.zeros((k + 1, k + 1))
        matrix[0, 0] = lam ** 2
        matrix[1:, 1:] = phi @ h @ phi.T
        try:
            if not is_eb_lorentz(matrix, tol=tol):
                return False
        except NotPositive:
            return False
    return True


def _decide(
    map_class: MapClass,
    norm: Callable[[OperatorMatrix], float],
    m: CentralMap,
    tol: float,
    anchor: Optional[str] = None,
) -> ClassResult:
    anchor = ANCHORS[map_class] if anchor is None else anchor
    try:
        value = float(norm(m.u))
    except (UnsupportedError, DimensionTooLarge) as exc:
        logger.debug(f"{map_class.value} unsupported: {exc}")
        return ClassResult(map_class, Verdict.UNSUPPORTED, None, m.lam, tol, anchor, note=str(exc))
    verdict = Verdict.TRUE if value <= m.lam + tol else Verdict.FALSE
    return ClassResult(map_class, verdict, value, m.lam, tol, anchor)


def _lor_ea_norm(u: OperatorMatrix) -> float:
    if not u.cod.is_euclidean:
        raise UnsupportedError(f"Lorentz-EA criterion needs an l2 codomain, got {u.cod}")
    return pi2(u)


def _max_ea_norm(u: OperatorMatrix) -> float:
    if u.dom.is_euclidean and u.cod.is_euclidean:
        return hs(u)
    if u.dom == SpaceDescriptor.linf(2) and u.cod.family is Family.L2:
        return alpha_square(u.entries)
    raise UnsupportedError(f"maxEA criterion not available for {u.dom} -> {u.cod}")


def classify_central(m: CentralMap, tol: Optional[float] = None) -> ClassificationReport:
    """Verdict per class for lam (+) u."""
    tol = get_config().threshold_tol if tol is None else tol
    report = ClassificationReport(m)
    decisions = [
        (MapClass.POSITIVE, op_norm),
        (MapClass.EB, nuclear),
        (MapClass.LOR_FACT, gamma2),
        (MapClass.LOR_EB, gamma2_star),
        (MapClass.LOR_EA_INTO_LORENTZ, _lor_ea_norm),
    ]
    for map_class, norm in decisions:
        report.results[map_class] = _decide(map_class, norm, m, tol)

    anchor = SQUARE_ANCHOR if m.u.dom == SpaceDescriptor.linf(2) else None
    report.results[MapClass.MAX_EA] = _decide(MapClass.MAX_EA, _max_ea_norm, m, tol, anchor)

    summary = ", ".join(f"{c.value}={r.verdict.value}" for c, r in report.results.items())
    logger.info(f"Central map lam={m.lam:g} on {m.u.dom} -> {m.u.cod}: {summary}")
    return report
