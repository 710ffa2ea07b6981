# conekit/repro/__init__.py
from conekit.repro.report import ReproCheck, ReproReport
from conekit.repro.peres import peres_pipeline
from conekit.repro.nonconvexity import nonconvexity_check
from conekit.repro.nonassoc import nonassociativity_check, nonassociativity_suite
from conekit.repro.square_cone import square_cone_check
from conekit.repro.psd_factorization import psd_factorization_check
from conekit.repro.lorentz_criteria import lorentz_criteria_check
from conekit.repro.runner import SUITES, run_all, run_suite, run_suites, suite_seed

__all__ = [
    "ReproCheck", "ReproReport", "peres_pipeline", "nonconvexity_check",
    "nonassociativity_check", "nonassociativity_suite", "square_cone_check",
    "psd_factorization_check", "lorentz_criteria_check",
    "SUITES", "run_all", "run_suite", "run_suites", "suite_seed",
]
