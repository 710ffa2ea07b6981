# conekit/errors.py
"""
Exception hierarchy.
Everything derives from ValueError so callers that only know about bad
arguments keep working.
"""


class ConekitError(ValueError):
    """Base class for all conekit errors."""


class DimensionMismatch(ConekitError):
    """Vector or matrix shape does not match its descriptor."""


class UnsupportedError(ConekitError):
    """Operation not available for this combination of spaces or cones."""


class DimensionTooLarge(ConekitError):
    """Enumeration or SDP block size beyond the configured cap."""


class NotAutomorphism(ConekitError):
    """Matrix fails the J-congruence A^T J A = c^2 J."""


class NotInterior(ConekitError):
    """Map is not in the interior of the positive cone."""


class NoConvergence(ConekitError):
    """Iteration hit its cap before reaching tolerance."""


class NotPositive(ConekitError):
    """Map is not Lorentz-positive."""


class DegenerateIntersection(ConekitError):
    """Subspace meets the Lorentz cone only at the origin."""


class InvalidW(ConekitError):
    """Dual-normalization vector w must lie in the open unit ball."""


class SchemaError(ConekitError):
    """Input file does not follow the expected JSON schema."""


class SolverError(ConekitError):
    """SDP solver did not return an optimal point."""
