# conekit/repro/report.py
"""
Reproduction reports: labelled checks with a value, a threshold and an anchor,
serialized to JSON with sorted keys so that runs diff byte-for-byte.
"""

import json
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from conekit import __version__


def to_plain(x: Any) -> Any:
    if isinstance(x, np.ndarray):
        return [to_plain(v) for v in x.tolist()]
    if isinstance(x, (np.floating, float)):
        value = float(x)
        return value if math.isfinite(value) else str(value)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if isinstance(x, dict):
        return {str(k): to_plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_plain(v) for v in x]
    return x


@dataclass(frozen=True)
class ReproCheck:
    """One labelled check: value against threshold within tolerance."""
    label: str
    threshold: Any
    value: Any
    tolerance: Optional[float]
    passed: bool
    anchor: str = ""

    def to_dict(self) -> dict:
        return {
            'label': self.label,
            'value': to_plain(self.value),
            'threshold': to_plain(self.threshold),
            'tolerance': self.tolerance,
            'pass': bool(self.passed),
            'paper_anchor': self.anchor,
        }


@dataclass
class ReproReport:
    name: str
    seed: Optional[int] = None
    checks: List[ReproCheck] = field(default_factory=list)
    inputs: Dict[str, Any] = field(default_factory=dict)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(
        self,
        label: str,
        threshold: Any,
        value: Any,
        passed: bool,
        tolerance: Optional[float] = None,
        anchor: str = "",
    ) -> ReproCheck:
        check = ReproCheck(label, threshold, value, tolerance, bool(passed), anchor)
        self.checks.append(check)
        return check

    def close(self, label: str, expected: float, value: float, tolerance: float, anchor: str = "") -> ReproCheck:
        """Check |value - expected| <= tolerance."""
        ok = abs(float(value) - float(expected)) <= tolerance
        return self.add(label, float(expected), float(value), ok, tolerance, anchor)

    def at_least(self, label: str, bound: float, value: float, tolerance: float = 0.0, anchor: str = "") -> ReproCheck:
        """Check value >= bound - tolerance."""
        ok = float(value) >= float(bound) - tolerance
        return self.add(label, f">= {bound:g}", float(value), ok, tolerance, anchor)

    def failures(self) -> List[ReproCheck]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            'command': 'reproduce',
            'name': self.name,
            'inputs': to_plain(self.inputs),
            'results': [c.to_dict() for c in self.checks],
            'overall': self.overall,
            'seed': self.seed,
            'version': __version__,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)
