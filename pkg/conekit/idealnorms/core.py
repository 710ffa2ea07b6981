# conekit/idealnorms/core.py
"""
Operator ideal norms on maps between l1/l2/linf spaces.

    hs          Hilbert-Schmidt (euclidean endpoints)
    nuclear     Nuc, closed forms or the trace-dual LP
    pi2         2-summing norm via a Pietsch measure on dual-ball extreme points
    gamma2      factorization through a Hilbert space, extreme-point Gram SDP
    gamma2_star trace dual of gamma2, support function of the gamma2 ball

All polytope reductions use one representative per +- pair of extreme
points, which leaves every norm unchanged.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import cvxpy as cp
import numpy as np

from conekit.config import get_config
from conekit.errors import DimensionTooLarge, UnsupportedError
from conekit.numerics.sdp import check_block_size, solve_model
from conekit.spaces.core import (
    Family,
    OperatorMatrix,
    SpaceDescriptor,
    dual_space,
    op_norm,
    symmetric_extreme_points,
    vec_norm,
)

logger = logging.getLogger(__name__)

_CVX_NORM = {Family.L1: 1, Family.L2: 2, Family.LINF: "inf"}


@dataclass(frozen=True)
class PietschMeasure:
    """Weights on dual-ball extreme points dominating u^T u."""
    weights: np.ndarray
    points: np.ndarray   # one point per row

    @property
    def mass(self) -> float:
        return float(np.sum(self.weights))


@dataclass(frozen=True)
class Gamma2Factorization:
    """
    Gram vectors of an optimal Hilbert factorization.
    <functional_vectors[i], point_vectors[j]> = <f_i, u x_j> over the
    extreme-point representatives f_i (cod-dual ball) and x_j (dom ball).
    """
    value: float
    functional_vectors: np.ndarray
    point_vectors: np.ndarray


@dataclass(frozen=True)
class Gamma2StarCertificate:
    """Optimal w: cod -> dom with gamma2(w) <= 1 and Tr(v w) = value."""
    value: float
    w: np.ndarray
    gram: Optional[Gamma2Factorization]


def _is_zero(u: OperatorMatrix) -> bool:
    return not np.any(u.entries)


def _gram_vectors(z: np.ndarray, split: int) -> Tuple[np.ndarray, np.ndarray]:
    w, v = np.linalg.eigh(0.5 * (z + z.T))
    w = np.clip(w, 0.0, None)
    vectors = v * np.sqrt(w)
    keep = w > 1e-12 * max(1.0, float(w.max(initial=0.0)))
    vectors = vectors[:, keep]
    return vectors[:split], vectors[split:]


def op_norm_ball(w, dom: SpaceDescriptor, cod: SpaceDescriptor) -> List:
    """cvxpy constraints expressing ||w: dom -> cod|| <= 1 for a variable w."""
    if dom.is_euclidean and cod.is_euclidean:
        return [cp.sigma_max(w) <= 1]
    if dom.is_polytope:
        points = symmetric_extreme_points(dom)
        return [cp.norm(w @ x, _CVX_NORM[cod.family]) <= 1 for x in points]
    functionals = symmetric_extreme_points(dual_space(cod))
    return [cp.norm(w.T @ f, 2) <= 1 for f in functionals]


def hs(u: OperatorMatrix) -> float:
    """Frobenius norm; defined on euclidean endpoints only."""
    if not (u.dom.is_euclidean and u.cod.is_euclidean):
        raise UnsupportedError(f"hs needs l2 endpoints, got {u.dom} -> {u.cod}")
    return float(np.linalg.norm(u.entries, 'fro'))


def nuclear(u: OperatorMatrix, tol: Optional[float] = None) -> float:
    """Nuclear norm for l2->l2 and for polytope pairs."""
    if u.dom.is_euclidean and u.cod.is_euclidean:
        return float(np.sum(np.linalg.svd(u.entries, compute_uv=False)))
    if not (u.dom.is_polytope and u.cod.is_polytope):
        raise UnsupportedError(f"nuclear norm not supported for {u.dom} -> {u.cod}")
    if u.dom.family is Family.LINF:
        # l1 (x) Y projective tensor norm is the l1 sum of column norms
        return sum(vec_norm(u.entries[:, j], u.cod) for j in range(u.dom.dim))
    if u.cod.family is Family.L1:
        dual_dom = dual_space(u.dom)
        return sum(vec_norm(u.entries[i, :], dual_dom) for i in range(u.cod.dim))
    return nuclear_lp(u, tol=tol)


def nuclear_lp(u: OperatorMatrix, tol: Optional[float] = None) -> float:
    """max Tr(u w) over ||w: cod -> dom|| <= 1, for polytope pairs."""
    if not (u.dom.is_polytope and u.cod.is_polytope):
        raise UnsupportedError(f"nuclear LP needs polytope balls, got {u.dom} -> {u.cod}")
    if _is_zero(u):
        return 0.0
    w = cp.Variable((u.dom.dim, u.cod.dim))
    problem = cp.Problem(
        cp.Maximize(cp.trace(u.entries @ w)),
        op_norm_ball(w, u.cod, u.dom),
    )
    solution = solve_model(problem, tol=tol)
    return max(solution.require_optimal("nuclear LP"), 0.0)


def pietsch_measure(u: OperatorMatrix, tol: Optional[float] = None) -> PietschMeasure:
    """
    Optimal Pietsch measure for u: dom -> l2 with dom in {l1, linf}:
    min sum(mu) s.t. sum_k mu_k f_k f_k^T >= u^T u, f_k extreme in the dual ball.
    """
    if not u.cod.is_euclidean:
        raise UnsupportedError(f"pi2 needs an l2 codomain, got {u.cod}")
    if u.dom.family is Family.L2:
        raise UnsupportedError("Euclidean domains need no Pietsch measure (pi2 = hs)")
    config = get_config()
    if u.dom.family is Family.L1 and u.dom.dim > config.pi2_l1_cap:
        raise DimensionTooLarge(
            f"Pietsch measure over 2^{u.dom.dim} sign vectors exceeds cap 2^{config.pi2_l1_cap}"
        )
    points = symmetric_extreme_points(dual_space(u.dom))
    n = u.dom.dim
    check_block_size(n, "pi2")
    gram = u.entries.T @ u.entries
    if _is_zero(u):
        return PietschMeasure(np.zeros(points.shape[0]), points)

    mu = cp.Variable(points.shape[0], nonneg=True)
    slack = cp.Variable((n, n), symmetric=True)
    problem = cp.Problem(
        cp.Minimize(cp.sum(mu)),
        [slack >> 0, slack == points.T @ cp.diag(mu) @ points - gram],
    )
    solution = solve_model(problem, [slack], [mu], tol=tol)
    solution.require_optimal("pi2 SDP")
    weights = np.clip(np.asarray(mu.value, dtype=float), 0.0, None)
    logger.debug(f"Pietsch mass {weights.sum():.3e} over {points.shape[0]} points")
    return PietschMeasure(weights, points)


def pi2(u: OperatorMatrix, tol: Optional[float] = None) -> float:
    """2-summing norm of u: dom -> l2."""
    if not u.cod.is_euclidean:
        raise UnsupportedError(f"pi2 needs an l2 codomain, got {u.cod}")
    if u.dom.is_euclidean:
        return hs(u)
    if _is_zero(u):
        return 0.0
    return float(np.sqrt(max(pietsch_measure(u, tol=tol).mass, 0.0)))


def _gram_sdp(m: np.ndarray, tol: Optional[float]) -> Tuple[float, np.ndarray]:
    """min c s.t. [[A, M], [M^T, B]] >= 0 with diag <= c."""
    k, n = m.shape
    check_block_size(k + n, "gamma2")
    z = cp.Variable((k + n, k + n), symmetric=True)
    c = cp.Variable()
    problem = cp.Problem(
        cp.Minimize(c),
        [z >> 0, z[:k, k:] == m, cp.diag(z) <= c],
    )
    solution = solve_model(problem, [z], [c], tol=tol)
    value = solution.require_optimal("gamma2 SDP")
    return max(value, 0.0), np.asarray(z.value, dtype=float)


def _reduced_matrix(u: OperatorMatrix) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    functionals = symmetric_extreme_points(dual_space(u.cod))
    points = symmetric_extreme_points(u.dom)
    return functionals @ u.entries @ points.T, functionals, points


def gamma2(u: OperatorMatrix, tol: Optional[float] = None) -> float:
    """Hilbert-space factorization norm."""
    if u.dom.is_euclidean or u.cod.is_euclidean:
        return op_norm(u)
    if _is_zero(u):
        return 0.0
    m, _, _ = _reduced_matrix(u)
    value, _ = _gram_sdp(m, tol)
    return value


def gamma2_factorization(u: OperatorMatrix, tol: Optional[float] = None) -> Gamma2Factorization:
    """Gram vectors of an optimal factorization for polytope pairs."""
    if u.dom.is_euclidean or u.cod.is_euclidean:
        raise UnsupportedError("Euclidean endpoints factor trivially through themselves")
    m, _, _ = _reduced_matrix(u)
    value, z = _gram_sdp(m, tol)
    left, right = _gram_vectors(z, m.shape[0])
    return Gamma2Factorization(value, left, right)


def gamma2_star_certificate(v: OperatorMatrix, tol: Optional[float] = None) -> Gamma2StarCertificate:
    """max Tr(v w) over w: cod -> dom with gamma2(w) <= 1."""
    dom, cod = v.dom, v.cod
    if _is_zero(v):
        return Gamma2StarCertificate(0.0, np.zeros((dom.dim, cod.dim)), None)

    w = cp.Variable((dom.dim, cod.dim))
    objective = cp.Maximize(cp.trace(v.entries @ w))
    if dom.is_euclidean or cod.is_euclidean:
        problem = cp.Problem(objective, op_norm_ball(w, cod, dom))
        solution = solve_model(problem, [], [w], tol=tol)
        value = solution.require_optimal("gamma2* program")
        return Gamma2StarCertificate(max(value, 0.0), np.asarray(w.value), None)

    functionals = symmetric_extreme_points(dual_space(dom))
    points = symmetric_extreme_points(cod)
    k, n = functionals.shape[0], points.shape[0]
    check_block_size(k + n, "gamma2*")
    z = cp.Variable((k + n, k + n), symmetric=True)
    problem = cp.Problem(
        objective,
        [z >> 0, z[:k, k:] == functionals @ w @ points.T, cp.diag(z) <= 1],
    )
    solution = solve_model(problem, [z], [w], tol=tol)
    value = solution.require_optimal("gamma2* SDP")
    zv = np.asarray(z.value, dtype=float)
    left, right = _gram_vectors(zv, k)
    gram = Gamma2Factorization(1.0, left, right)
    return Gamma2StarCertificate(max(value, 0.0), np.asarray(w.value), gram)


def gamma2_star(v: OperatorMatrix, tol: Optional[float] = None) -> float:
    """Trace dual of gamma2."""
    return gamma2_star_certificate(v, tol=tol).value
