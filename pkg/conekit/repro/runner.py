# conekit/repro/runner.py
"""
Run reproduction suites, one worker thread per suite.
Per-suite seeds are derived from (seed, name) so results do not depend on
which suites run together.
"""

import asyncio
import hashlib
import logging
from typing import Callable, Dict, List, Optional, Sequence

from conekit.config import get_config
from conekit.repro.lorentz_criteria import lorentz_criteria_check
from conekit.repro.nonassoc import nonassociativity_suite
from conekit.repro.nonconvexity import nonconvexity_check
from conekit.repro.peres import peres_pipeline
from conekit.repro.psd_factorization import psd_factorization_check
from conekit.repro.report import ReproReport
from conekit.repro.square_cone import square_cone_check

logger = logging.getLogger(__name__)

SUITES: Dict[str, Callable[..., ReproReport]] = {
    "peres": peres_pipeline,
    "nonconvexity": nonconvexity_check,
    "nonassoc": nonassociativity_suite,
    "square-cone": square_cone_check,
    "psd-factorization": psd_factorization_check,
    "lorentz-criteria": lorentz_criteria_check,
}


def suite_seed(seed: int, name: str) -> int:
    digest = hashlib.sha256(f"{seed}:{name}".encode()).digest()
    return int.from_bytes(digest[:4], "big")


def run_suite(name: str, seed: Optional[int] = None) -> ReproReport:
    if name not in SUITES:
        raise ValueError(f"Unknown suite {name!r}; expected one of {sorted(SUITES)}")
    seed = get_config().seed if seed is None else seed
    derived = suite_seed(seed, name)
    logger.info(f"Running suite {name} with seed {derived}")
    return SUITES[name](seed=derived)


async def run_suites(names: Sequence[str], seed: Optional[int] = None) -> List[ReproReport]:
    """Reports in the order of names."""
    seed = get_config().seed if seed is None else seed
    tasks = [asyncio.to_thread(run_suite, name, seed) for name in names]
    reports = await asyncio.gather(*tasks)
    failed = [r.name for r in reports if not r.overall]
    if failed:
        logger.warning(f"Failing suites: {', '.join(failed)}")
    return list(reports)


async def run_all(seed: Optional[int] = None) -> List[ReproReport]:
    return await run_suites(list(SUITES), seed)
