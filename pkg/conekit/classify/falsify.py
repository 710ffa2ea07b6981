# conekit/classify/falsify.py
"""
Randomized falsifiers for map classes between general cones.

A map P: C_A -> C_B is Lorentz-entanglement breaking iff every sandwich
B P A with positive legs A: L_k -> C_A and B: C_B -> L_k is entanglement
breaking, where k = min(dim C_A, dim C_B) - 1 suffices. Legs are sampled, so
a witness disproves membership while its absence proves nothing.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from conekit.config import get_config
from conekit.cones.core import ConeDescriptor, ConeKind, ConeMap, dual_cone, random_member
from conekit.cones.hermitian import bloch_matrix, superoperator_from_map
from conekit.errors import NoConvergence, NotInterior, NotPositive
from conekit.lorentzmaps.automorphisms import random_automorphism
from conekit.lorentzmaps.criteria import is_eb_lorentz, max_ea_criterion
from conekit.lorentzmaps.extreme import extreme_pos0
from conekit.lorentzmaps.positivity import is_lorentz_positive
from conekit.lorentzmaps.sampling import dressed_central, random_diagonal_contraction
from conekit.spaces.core import Family, OperatorMatrix, SpaceDescriptor, op_norm

logger = logging.getLogger(__name__)

EXTREME_SHARE = 0.7
PERTURBATION_SCALE = 0.1


def _central_into_linf(k: int, n: int, rng: np.random.Generator) -> np.ndarray:
    u = rng.standard_normal((n, k))
    u /= np.maximum(np.linalg.norm(u, axis=1), 1e-12)[:, None]
    u *= rng.uniform(0.0, 1.0, size=(n, 1))
    return _central(u)


def _central_into_l1(k: int, n: int, rng: np.random.Generator) -> np.ndarray:
    u = rng.standard_normal((n, k))
    norm = op_norm(OperatorMatrix(u, SpaceDescriptor.l2(k), SpaceDescriptor.l1(n)))
    u *= rng.uniform(0.0, 1.0) / max(norm, 1e-12)
    return _central(u)


def _central(u: np.ndarray) -> np.ndarray:
    out = np.zeros((u.shape[0] + 1, u.shape[1] + 1))
    out[0, 0] = 1.0
    out[1:, 1:] = u
    return out


def _lorentz_leg(k: int, n: int, rng: np.random.Generator) -> np.ndarray:
    v = random_diagonal_contraction(k, n, rng)
    return dressed_central(v, k, n, rng).matrix


def _psd_leg(k: int, d: int, rng: np.random.Generator) -> np.ndarray:
    """L_k -> L_3 -> Psd(2) (Bloch) -> Psd(d) (X -> V X V^dagger)."""
    embed = rng.standard_normal((d, 2)) + 1j * rng.standard_normal((d, 2))
    embed /= np.linalg.norm(embed, 2)
    conj = superoperator_from_map(lambda x: embed @ x @ embed.conj().T, 2, d)
    return conj @ bloch_matrix() @ _lorentz_leg(k, 3, rng)


def _base_leg(c: ConeDescriptor, k: int, rng: np.random.Generator) -> np.ndarray:
    if c.kind is ConeKind.PSD:
        return _psd_leg(k, c.n, rng)
    if c.is_lorentz_like:
        return _lorentz_leg(k, c.n, rng)
    if c.space.family is Family.LINF:
        if rng.uniform() < EXTREME_SHARE:
            seed = int(rng.integers(2 ** 32))
            return extreme_pos0(k, c.n, seed).matrix @ random_automorphism(k, rng)
        return _central_into_linf(k, c.n, rng)
    return _central_into_l1(k, c.n, rng)


def sample_legs_into(c: ConeDescriptor, k: int, rng: np.random.Generator) -> ConeMap:
    """A random positive map Lorentz(k) -> c."""
    matrix = _base_leg(c, k, rng)
    if rng.uniform() >= EXTREME_SHARE:
        # x e0^T maps L_k onto the ray of x
        x = random_member(c, rng)
        x /= max(float(np.linalg.norm(x)), 1e-12)
        matrix = matrix + rng.uniform(0.0, PERTURBATION_SCALE) * np.outer(x, np.eye(k + 1)[0])
    return ConeMap(matrix, ConeDescriptor.lorentz(k), c)


def sample_legs_from(c: ConeDescriptor, k: int, rng: np.random.Generator) -> ConeMap:
    """A random positive map c -> Lorentz(k), the transpose of a leg into dual(c)."""
    return sample_legs_into(dual_cone(c), k, rng).transpose()


def _identity_leg(c: ConeDescriptor, k: int, into: bool) -> Optional[ConeMap]:
    if not (c.is_lorentz_like and c.n == k):
        return None
    lorentz = ConeDescriptor.lorentz(k)
    if into:
        return ConeMap(np.eye(k + 1), lorentz, c)
    return ConeMap(np.eye(k + 1), c, lorentz)


def reduced_dim(p: ConeMap) -> int:
    return max(min(p.dom.ambient_dim, p.cod.ambient_dim) - 1, 1)


@dataclass(frozen=True)
class Witness:
    """Legs A, B with B P A not entanglement breaking."""
    trial: int
    seed: int
    a: Optional[np.ndarray]
    b: Optional[np.ndarray]
    sandwich: Optional[np.ndarray]
    reason: str

    def to_dict(self) -> dict:
        def listed(x):
            return None if x is None else x.tolist()
        return {
            'trial': self.trial,
            'seed': self.seed,
            'a': listed(self.a),
            'b': listed(self.b),
            'sandwich': listed(self.sandwich),
            'reason': self.reason,
        }


def lor_eb_falsify(
    p: ConeMap,
    trials: int = 200,
    seed: Optional[int] = None,
    k: Optional[int] = None,
    tol: Optional[float] = None,
) -> Optional[Witness]:
    """
    Search for legs A, B with B P A outside EB(L_k, L_k). Trials run in
    order with generators seeded by (seed, trial), so the returned witness
    is the lowest-index one.
    """
    seed = get_config().seed if seed is None else seed
    k = reduced_dim(p) if k is None else k
    if p.between_lorentz and not is_lorentz_positive(p.matrix):
        logger.info("Map between Lorentz cones is not positive")
        return Witness(0, seed, None, None, None, "map is not positive")

    skipped = 0
    for trial in range(trials):
        rng = np.random.default_rng([seed, trial])
        a = _identity_leg(p.dom, k, into=True) if trial == 0 else None
        b = _identity_leg(p.cod, k, into=False) if trial == 0 else None
        a = sample_legs_into(p.dom, k, rng) if a is None else a
        b = sample_legs_from(p.cod, k, rng) if b is None else b
        sandwich = b.matrix @ p.matrix @ a.matrix
        try:
            eb = is_eb_lorentz(sandwich, tol=tol, assume_positive=True)
        except (NoConvergence, NotInterior) as exc:
            skipped += 1
            logger.warning(f"Skipping trial {trial}: {exc}")
            continue
        if not eb:
            logger.info(f"LorEB witness at trial {trial} (k={k})")
            return Witness(trial, seed, a.matrix, b.matrix, sandwich, "B P A is not entanglement breaking")

    logger.info(f"No LorEB witness in {trials} trials (k={k}, {skipped} skipped)")
    return None


def _passes_max_ea(matrix: np.ndarray, tol: Optional[float]) -> bool:
    try:
        verdict, _ = max_ea_criterion(matrix, tol=tol)
    except NotPositive:
        return False
    return verdict


def lor_ea_product_check(
    p: ConeMap,
    q: ConeMap,
    trials: int = 200,
    seed: Optional[int] = None,
    tol: Optional[float] = None,
) -> bool:
    """
    Sampled check that P (x) Q sends the Lorentzian tensor product of the
    domain into the minimal tensor product: P S and Q S must be maxEA for
    every positive leg S: L_k -> dom.
    """
    if p.dom != q.dom:
        raise ValueError(f"Maps need a shared domain, got {p.dom} and {q.dom}")
    for r in (p, q):
        if not r.cod.is_lorentz_like:
            raise ValueError(f"Expected a map into a Lorentz cone, got {r.cod}")
    seed = get_config().seed if seed is None else seed
    k = p.dom.ambient_dim - 1

    for trial in range(trials):
        rng = np.random.default_rng([seed, trial])
        s = _identity_leg(p.dom, k, into=True) if trial == 0 else None
        s = sample_legs_into(p.dom, k, rng) if s is None else s
        for name, r in (("P", p), ("Q", q)):
            if not _passes_max_ea(r.matrix @ s.matrix, tol):
                logger.info(f"{name} S fails the maxEA criterion at trial {trial}")
                return False
    return True


def factorization_lor_eb(
    a: ConeMap,
    b: ConeMap,
    trials: int = 200,
    seed: Optional[int] = None,
    tol: Optional[float] = None,
) -> bool:
    """B^T A for A: C_A -> L_m and B: dual(C_B) -> L_m; true iff no LorEB witness is found."""
    if a.cod.ambient_dim != b.cod.ambient_dim:
        raise ValueError(f"A and B must share the Lorentz codomain, got {a.cod} and {b.cod}")
    seed = get_config().seed if seed is None else seed
    for name, leg in (("A", a), ("B", b)):
        if not lor_ea_product_check(leg, leg, trials=min(trials, 20), seed=seed, tol=tol):
            logger.warning(f"{name} fails the sampled Lorentz-EA check")
    composite = b.transpose() @ a
    return lor_eb_falsify(composite, trials=trials, seed=seed, tol=tol) is None


@dataclass(frozen=True)
class ConvexityRecord:
    weight: float
    p_passes: bool
    q_passes: bool
    mix_passes: bool

    @property
    def counterexample(self) -> bool:
        return self.p_passes and self.q_passes and not self.mix_passes

    def to_dict(self) -> dict:
        return {
            'weight': self.weight,
            'p_passes': self.p_passes,
            'q_passes': self.q_passes,
            'mix_passes': self.mix_passes,
            'counterexample': self.counterexample,
        }


@dataclass
class ConvexitySearch:
    records: List[ConvexityRecord] = field(default_factory=list)

    @property
    def counterexamples(self) -> int:
        return sum(r.counterexample for r in self.records)


def lor_ea_convexity_search(
    p: ConeMap,
    q: ConeMap,
    weights: Sequence[float] = (0.25, 0.5, 0.75),
    trials: int = 50,
    seed: Optional[int] = None,
) -> ConvexitySearch:
    """Record whether convex combinations of sampled Lorentz-EA maps stay Lorentz-EA."""
    p_passes = lor_ea_product_check(p, p, trials=trials, seed=seed)
    q_passes = lor_ea_product_check(q, q, trials=trials, seed=seed)
    search = ConvexitySearch()
    for w in weights:
        mix = p.scaled(w) + q.scaled(1.0 - w)
        mix_passes = lor_ea_product_check(mix, mix, trials=trials, seed=seed)
        search.records.append(ConvexityRecord(float(w), p_passes, q_passes, mix_passes))
    logger.info(f"Convexity search: {search.counterexamples} counterexamples over {len(weights)} weights")
    return search
