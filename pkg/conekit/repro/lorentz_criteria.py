# conekit/repro/lorentz_criteria.py
"""
Cross-validation of the Lorentz-cone criteria: the Hilbert-Schmidt and
eigenvalue tests for maxEA, maxEA against EB of P J P^T, Sinkhorn round
trips, the constructive 2-summing factorizations and the retract pair.
"""

import logging
from typing import Optional

import numpy as np

from conekit.classify.factorization import (
    central_factorization, pietsch_factorization, random_pietsch_factors, two_summing_factorization,
)
from conekit.classify.falsify import sample_legs_into
from conekit.config import get_config
from conekit.cones.core import ConeDescriptor, member
from conekit.cones.tensors import j_matrix
from conekit.errors import NotPositive
from conekit.lorentzmaps.automorphisms import random_automorphism
from conekit.lorentzmaps.criteria import is_eb_lorentz, j_eigenvalues, max_ea_criterion
from conekit.lorentzmaps.positivity import sample_boundary_rays
from conekit.lorentzmaps.retract import retract_maps
from conekit.lorentzmaps.sampling import (
    dressed_central, random_central_lorentz, random_diagonal_contraction, random_positive_lorentz,
)
from conekit.lorentzmaps.sinkhorn import sinkhorn_normal_form
from conekit.repro.report import ReproReport
from conekit.spaces.core import OperatorMatrix, SpaceDescriptor

logger = logging.getLogger(__name__)

MAX_LORENTZ = 5
# draws this close to a threshold are not counted
BAND = 1e-3
FACTOR_TOL = 1e-10
PIETSCH_TOL = 1e-6
RESIDUAL_TOL = 1e-8
DIAGONAL_TOL = 1e-6
SPECTRUM_TOL = 1e-8


def _dims(rng: np.random.Generator):
    return int(rng.integers(1, MAX_LORENTZ + 1)), int(rng.integers(1, MAX_LORENTZ + 1))


def hs_vs_eigenvalue(trials: int, rng: np.random.Generator):
    """(disagreements, skipped) between hs(v) <= t and the eigenvalue test on t (+) v."""
    disagreements = skipped = 0
    for _ in range(trials):
        n, m = _dims(rng)
        p = random_central_lorentz(n, m, rng, t=1.0)
        hs_value = float(np.linalg.norm(p[1:, 1:]))
        if abs(hs_value - 1.0) < BAND:
            skipped += 1
            continue
        verdict, _ = max_ea_criterion(p)
        disagreements += verdict != (hs_value <= 1.0)
    return disagreements, skipped


def _eb_of_square(p: np.ndarray) -> bool:
    square = p @ j_matrix(p.shape[1] - 1) @ p.T
    try:
        return is_eb_lorentz(square)
    except NotPositive:
        return False


def max_ea_vs_eb(trials: int, rng: np.random.Generator):
    """(disagreements, skipped) between max_ea_criterion(P) and EB of P J P^T."""
    disagreements = skipped = 0
    for _ in range(trials):
        n, m = _dims(rng)
        p = random_positive_lorentz(n, m, rng)
        values = j_eigenvalues(p)
        scale = 1.0 + float(np.max(np.abs(values)))
        if abs(values[0] - np.sum(values[1:])) < BAND * scale:
            skipped += 1
            continue
        verdict, _ = max_ea_criterion(p)
        disagreements += verdict != _eb_of_square(p)
    return disagreements, skipped


def sinkhorn_round_trips(trials: int, rng: np.random.Generator):
    """Worst residual, worst diagonal mismatch and worst spectrum drift."""
    residual = diagonal = spectrum = 0.0
    for _ in range(trials):
        n, m = _dims(rng)
        v = random_diagonal_contraction(n, m, rng)
        dressed = dressed_central(v, n, m, rng)
        form = sinkhorn_normal_form(dressed.matrix)
        residual = max(residual, form.residual)
        expected = np.sort(np.abs(v))[::-1]
        diagonal = max(diagonal, float(np.max(np.abs(np.sort(form.v)[::-1] - expected), initial=0.0)))

        redressed = random_automorphism(m, rng) @ dressed.matrix @ random_automorphism(n, rng)
        before, after = j_eigenvalues(dressed.matrix), j_eigenvalues(redressed)
        scale = 1.0 + float(np.max(np.abs(before)))
        spectrum = max(spectrum, float(np.max(np.abs(before - after))) / scale)
    return residual, diagonal, spectrum


def _random_domain(n: int, rng: np.random.Generator) -> SpaceDescriptor:
    return SpaceDescriptor(str(rng.choice(["l1", "l2", "linf"])), n)


def two_summing_round_trips(trials: int, rng: np.random.Generator):
    """
    Worst ||(1 (+) v) S - P Q||, number of Q failing the maxEA test and worst
    reconstruction error of the optimal Pietsch factorization.
    """
    worst = pietsch_error = 0.0
    failures = 0
    for i in range(trials):
        n, m, width = (int(x) for x in rng.integers(1, 5, size=3))
        dom = _random_domain(n, rng)
        factors = random_pietsch_factors(n, m, width, rng, dom=dom)
        k = int(rng.integers(1, 5))
        s = sample_legs_into(ConeDescriptor.over(dom), k, rng).matrix
        p, q = two_summing_factorization(1.0, factors, s)
        target = np.zeros((m + 1, n + 1))
        target[0, 0] = 1.0
        target[1:, 1:] = factors.product()
        worst = max(worst, float(np.max(np.abs(target @ s - p @ q))))
        try:
            passed, _ = max_ea_criterion(q)
        except NotPositive:
            passed = False
        failures += not passed
        if i % 10 == 0:
            v = OperatorMatrix(factors.product(), dom, SpaceDescriptor.l2(m))
            optimal = pietsch_factorization(v)
            pietsch_error = max(pietsch_error, float(np.max(np.abs(optimal.product() - v.entries))))
    return worst, failures, pietsch_error


def central_round_trips(trials: int, rng: np.random.Generator):
    """Worst ||t (+) v - P Q|| on euclidean domains and maxEA failures of Q."""
    worst = 0.0
    failures = 0
    for _ in range(trials):
        n, m, width = (int(x) for x in rng.integers(1, 5, size=3))
        factors = random_pietsch_factors(n, m, width, rng)
        p, q = central_factorization(1.0, factors)
        target = np.zeros((m + 1, n + 1))
        target[0, 0] = 1.0
        target[1:, 1:] = factors.product()
        worst = max(worst, float(np.max(np.abs(target - p @ q))))
        passed, _ = max_ea_criterion(q)
        failures += not passed
    return worst, failures


def retract_round_trips(trials: int, rays: int, rng: np.random.Generator):
    """Worst beta alpha - id on S and the number of sampled rays leaving their cone."""
    worst = 0.0
    escapes = 0
    for i in range(trials):
        n = 4 if i % 2 == 0 else 5
        k = int(rng.integers(1, n + 2))
        interior = np.concatenate([[1.0], rng.uniform(-0.3, 0.3, size=n)])
        basis = np.column_stack([interior] + [rng.standard_normal(n + 1) for _ in range(k - 1)])
        retract = retract_maps(basis)
        worst = max(worst, retract.roundtrip_error(basis))

        points = basis @ rng.standard_normal((k, rays))
        points *= np.where(points[0] >= 0, 1.0, -1.0)
        lorentz_n = ConeDescriptor.lorentz(n)
        inside = [x for x in points.T if member(x, lorentz_n, tol=0.0)]
        if retract.dim > 1:
            lorentz_k = ConeDescriptor.lorentz(retract.dim - 1)
            escapes += sum(not member(retract.alpha @ x, lorentz_k, tol=1e-9) for x in inside)
            boundary = sample_boundary_rays(retract.dim - 1, rays, rng)
            escapes += sum(not member(retract.beta @ y, lorentz_n, tol=1e-9) for y in boundary)
    return worst, escapes


def lorentz_criteria_check(trials: int = 200, seed: Optional[int] = None, rays: int = 1000) -> ReproReport:
    seed = get_config().seed if seed is None else seed
    report = ReproReport("lorentz-criteria", seed=seed, inputs={'trials': trials, 'rays': rays})

    def generator(stream: int) -> np.random.Generator:
        return np.random.default_rng([seed, stream])

    disagreements, skipped = hs_vs_eigenvalue(trials, generator(0))
    report.add("hs(v) <= t agrees with the eigenvalue criterion", 0, disagreements, disagreements == 0,
               anchor="t (+) v is maxEA iff hs(v) <= t")
    report.inputs['hs_skipped'] = skipped

    disagreements, skipped = max_ea_vs_eb(trials, generator(1))
    report.add("maxEA criterion agrees with EB of P J P^T", 0, disagreements, disagreements == 0,
               anchor="P is maxEA iff P J P^T is entanglement breaking")
    report.inputs['eb_skipped'] = skipped

    residual, diagonal, spectrum = sinkhorn_round_trips(trials, generator(2))
    report.close("Sinkhorn reconstruction residual", 0.0, residual, RESIDUAL_TOL, anchor="B P A = 1 (+) v")
    report.close("Sinkhorn diagonal matches |v|", 0.0, diagonal, DIAGONAL_TOL, anchor="B P A = 1 (+) v")
    report.close("J-spectrum is automorphism invariant", 0.0, spectrum, SPECTRUM_TOL,
                 anchor="eigenvalues of J P J P^T")

    half = max(trials // 2, 1)
    worst, failures, pietsch_error = two_summing_round_trips(half, generator(3))
    report.close("(1 (+) v) S = P Q", 0.0, worst, FACTOR_TOL, anchor="2-summing factorization")
    report.add("Q passes the maxEA criterion", 0, failures, failures == 0, anchor="2-summing factorization")
    report.close("optimal Pietsch factorization reproduces v", 0.0, pietsch_error, PIETSCH_TOL,
                 anchor="v = u2 Delta u1")

    worst, failures = central_round_trips(half, generator(4))
    report.close("t (+) v = P Q on euclidean domains", 0.0, worst, FACTOR_TOL, anchor="Lorentz-EA factorization")
    report.add("Q = t (+) Delta u1 is maxEA", 0, failures, failures == 0, anchor="Lorentz-EA factorization")

    worst, escapes = retract_round_trips(half, rays, generator(5))
    report.close("beta alpha = id on S", 0.0, worst, FACTOR_TOL, anchor="retract of a Lorentz section")
    report.add("retract maps send cones into cones", 0, escapes, escapes == 0, anchor="retract of a Lorentz section")

    logger.info(f"Lorentz criteria overall={report.overall}")
    return report
