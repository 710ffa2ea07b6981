# conekit/repro/peres.py
"""
Lorentz-entanglement breaking map on 3x3 matrices that is not
entanglement breaking.

T is completely positive and completely copositive. A: C[l1(3)] -> Psd(3)
sends e_i to the observables A_i, B: Psd(3) -> C[l1(3)] reads the
functionals Tr[B_i X]. Tr[B T A] < 0 rules out entanglement breaking for
T A B, while no sampled Lorentz sandwich of T A B fails the EB test.
"""

import logging
from typing import Optional

import numpy as np
import sympy as sp

from conekit.config import get_config
from conekit.classify.falsify import lor_eb_falsify
from conekit.cones.core import ConeDescriptor, ConeMap, random_member
from conekit.cones.hermitian import choi_matrix, devectorize, partial_transpose, superoperator, vectorize
from conekit.numerics.linalg import min_eig
from conekit.repro.constants import (
    PERES_FUNCTIONALS, PERES_KRAUS, PERES_VECTORS, PERES_WEIGHTS, frozen_constants,
    peres_observables, to_float,
)
from conekit.repro.report import ReproReport

logger = logging.getLogger(__name__)

PSD_TOL = 1e-10
TRACE_BOUND = -1e-6
FROZEN_TOL = 1e-9
POSITIVITY_SAMPLES = 200
DEFAULT_TRIALS = 10_000


def exact_trace() -> sp.Expr:
    """Tr[B T A] = sum_i Tr[B_i T(A_i)] with A_0 = B_0 = I."""
    total = sp.Integer(0)
    for b, a in zip(PERES_FUNCTIONALS, peres_observables()):
        image = sp.zeros(3, 3)
        for w, k in zip(PERES_WEIGHTS, PERES_KRAUS):
            image += w * k * a * k.T
        total += (b * image).trace()
    return sp.expand(total)


def peres_maps():
    """(T, A, B) as real matrices in Hermitian-basis coordinates."""
    kraus = [to_float(k) for k in PERES_KRAUS]
    weights = [float(w) for w in PERES_WEIGHTS]
    t = superoperator(kraus, weights)
    a = np.column_stack([vectorize(to_float(x)) for x in peres_observables()])
    b = np.vstack([vectorize(to_float(x)) for x in PERES_FUNCTIONALS])
    return t, a, b


def peres_pipeline(seed: Optional[int] = None, trials: int = DEFAULT_TRIALS) -> ReproReport:
    seed = get_config().seed if seed is None else seed
    report = ReproReport("peres", seed=seed, inputs={'trials': trials})

    weight_sum = sum(PERES_WEIGHTS, sp.Integer(0))
    report.add("weights sum to one", 1, str(weight_sum), weight_sum == 1,
               anchor="exact rational arithmetic")

    kraus = [to_float(k) for k in PERES_KRAUS]
    weights = [float(w) for w in PERES_WEIGHTS]
    choi = choi_matrix(kraus, weights)
    report.at_least("Choi matrix is PSD", 0.0, min_eig(choi), PSD_TOL,
                    anchor="T is completely positive")
    report.at_least("partial transpose of the Choi matrix is PSD", 0.0,
                    min_eig(partial_transpose(choi, (3, 3))), PSD_TOL,
                    anchor="T is completely copositive")

    for i, vec in enumerate(PERES_VECTORS, start=1):
        norm = sp.simplify(vec.dot(vec))
        report.add(f"a_{i} is a unit vector", 1, str(norm), norm == 1, anchor="normalized vectors")
    for i, obs in enumerate(peres_observables()[1:], start=1):
        residual = sp.simplify(obs * obs - sp.eye(3))
        report.add(f"A_{i} is a reflection", "A^2 = I", "A^2 = I" if residual.is_zero_matrix else "A^2 != I",
                   bool(residual.is_zero_matrix), anchor="A_i = 2|a_i><a_i| - I")

    trace = exact_trace()
    trace_value = float(trace.evalf(30))
    report.add("Tr[BTA] is strictly negative", f"< {TRACE_BOUND:g}", trace_value,
               trace_value < TRACE_BOUND, anchor="entanglement breaking maps have nonnegative trace")
    frozen = frozen_constants().get("peres_trace")
    if frozen is not None:
        report.close("Tr[BTA] matches the frozen value", float(frozen), trace_value, FROZEN_TOL,
                     anchor="regression constant")

    t, a, b = peres_maps()
    tab = t @ a @ b
    rng = np.random.default_rng([seed, 0])
    worst = min(
        min_eig(devectorize(tab @ random_member(ConeDescriptor.psd(3), rng))) for _ in range(POSITIVITY_SAMPLES)
    )
    report.at_least("TAB maps sampled PSD points into PSD", 0.0, worst, PSD_TOL, anchor="TAB is positive")

    # every sampled Psd leg factors through L_3, so k = 3 loses nothing
    cone = ConeDescriptor.psd(3)
    witness = lor_eb_falsify(ConeMap(tab, cone, cone), trials=trials, seed=seed, k=3)
    report.add("no LorEB witness for TAB", "none", None if witness is None else witness.to_dict(),
               witness is None, anchor="TAB is Lorentz-entanglement breaking (sampled, one-way)")

    report.inputs['trace_exact'] = str(trace)
    logger.info(f"Peres pipeline: Tr[BTA]={trace_value:.6e}, overall={report.overall}")
    return report
