# conekit/cli/io.py
"""
JSON plumbing for the command line: matrix files in, reports out.

Matrix file:
    {"rows": 2, "cols": 2, "data": [1, 0, 0, 1],
     "dom": {"family": "l1", "dim": 2}, "cod": {"family": "l2", "dim": 2},
     "lambda": 1.0}
"""

import functools
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Union

import click
import numpy as np

from conekit import __version__
from conekit.errors import (
    ConekitError, DimensionMismatch, DimensionTooLarge, NoConvergence, NotInterior, SchemaError, SolverError,
    UnsupportedError,
)
from conekit.repro.report import to_plain
from conekit.spaces.core import Family, OperatorMatrix, SpaceDescriptor

logger = logging.getLogger(__name__)

REQUIRED_KEYS = ("rows", "cols", "data", "dom", "cod")
REPORT_KEYS = ("command", "inputs", "results", "seed", "version")
RESULT_KEYS = ("value", "threshold", "tolerance", "pass", "paper_anchor")
FAMILIES = tuple(f.value for f in Family)


@dataclass(frozen=True)
class MatrixFile:
    matrix: np.ndarray
    dom: SpaceDescriptor
    cod: SpaceDescriptor
    lam: Optional[float] = None

    def operator(self) -> OperatorMatrix:
        return OperatorMatrix(self.matrix, self.dom, self.cod)

    def to_dict(self) -> dict:
        rows, cols = self.matrix.shape
        data = {
            'rows': rows,
            'cols': cols,
            'data': self.matrix.reshape(-1).tolist(),
            'dom': self.dom.to_dict(),
            'cod': self.cod.to_dict(),
        }
        if self.lam is not None:
            data['lambda'] = self.lam
        return data


def _space(raw: Any, key: str) -> SpaceDescriptor:
    if not isinstance(raw, dict) or set(raw) != {"family", "dim"}:
        raise SchemaError(f"'{key}' must be an object with 'family' and 'dim'")
    family, dim = raw["family"], raw["dim"]
    if family not in FAMILIES:
        raise SchemaError(f"'{key}.family' must be one of {FAMILIES}, got {family!r}")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise SchemaError(f"'{key}.dim' must be a positive integer, got {dim!r}")
    return SpaceDescriptor(Family(family), dim)


def _count(raw: Any, key: str) -> int:
    if not isinstance(raw, int) or isinstance(raw, bool) or raw < 1:
        raise SchemaError(f"'{key}' must be a positive integer, got {raw!r}")
    return raw


def _number(raw: Any, key: str) -> float:
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise SchemaError(f"'{key}' must be a number, got {raw!r}")
    return float(raw)


def parse_matrix_file(data: Any) -> MatrixFile:
    if not isinstance(data, dict):
        raise SchemaError("Matrix file must hold a JSON object")
    missing = [k for k in REQUIRED_KEYS if k not in data]
    if missing:
        raise SchemaError(f"Matrix file is missing {', '.join(missing)}")
    unknown = set(data) - set(REQUIRED_KEYS) - {"lambda"}
    if unknown:
        raise SchemaError(f"Unknown keys in matrix file: {', '.join(sorted(unknown))}")

    rows, cols = _count(data["rows"], "rows"), _count(data["cols"], "cols")
    values = data["data"]
    if not isinstance(values, list):
        raise SchemaError("'data' must be a flat array of numbers")
    if len(values) != rows * cols:
        raise SchemaError(f"'data' has {len(values)} entries, expected rows*cols = {rows * cols}")
    matrix = np.array([_number(x, "data[]") for x in values], dtype=float).reshape(rows, cols)
    lam = _number(data["lambda"], "lambda") if "lambda" in data else None
    return MatrixFile(matrix, _space(data["dom"], "dom"), _space(data["cod"], "cod"), lam)


def load_matrix_file(path: Union[str, Path]) -> MatrixFile:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc
    logger.debug(f"Loaded matrix file {path}")
    return parse_matrix_file(data)


def build_report(
    command: str,
    inputs: Dict[str, Any],
    results: List[Dict[str, Any]],
    seed: Optional[int] = None,
    **extra: Any,
) -> Dict[str, Any]:
    report = {
        'command': command,
        'inputs': inputs,
        'results': results,
        'seed': seed,
        'version': __version__,
    }
    report.update(extra)
    return to_plain(report)


def dumps(report: Any) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def validate_report(data: Any) -> Dict[str, Any]:
    """Check the shape shared by every report the CLI prints."""
    if not isinstance(data, dict):
        raise SchemaError("Report must be a JSON object")
    missing = [k for k in REPORT_KEYS if k not in data]
    if missing:
        raise SchemaError(f"Report is missing {', '.join(missing)}")
    if not isinstance(data["results"], list):
        raise SchemaError("'results' must be an array")
    for i, result in enumerate(data["results"]):
        if not isinstance(result, dict):
            raise SchemaError(f"results[{i}] must be an object")
        missing = [k for k in RESULT_KEYS if k not in result]
        if missing:
            raise SchemaError(f"results[{i}] is missing {', '.join(missing)}")
        if not isinstance(result["pass"], bool):
            raise SchemaError(f"results[{i}].pass must be a boolean")
        if not isinstance(result["paper_anchor"], str):
            raise SchemaError(f"results[{i}].paper_anchor must be a string")
    if data["version"] != __version__:
        logger.warning(f"Report version {data['version']} differs from {__version__}")
    return data


EXIT_CODES = (
    (SchemaError, 2),
    (UnsupportedError, 3),
    (DimensionTooLarge, 3),
    (DimensionMismatch, 3),
    (SolverError, 4),
    (NotInterior, 5),
    (NoConvergence, 6),
)


def exit_code_for(exc: Exception) -> Optional[int]:
    for error_type, code in EXIT_CODES:
        if isinstance(exc, error_type):
            return code
    return None


def exit_on_error(command: Callable) -> Callable:
    """Map library errors to exit codes; the message goes to standard error."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ConekitError as exc:
            code = exit_code_for(exc)
            if code is None:
                raise
            logger.debug(f"{type(exc).__name__} -> exit {code}")
            click.echo(f"Error: {exc}", err=True)
            sys.exit(code)
    return wrapper
