# conekit/spaces/__init__.py
from conekit.spaces.core import (
    Family, SpaceDescriptor, OperatorMatrix, vec_norm, dual_space,
    ball_extreme_points, symmetric_extreme_points, op_norm,
)

__all__ = [
    "Family", "SpaceDescriptor", "OperatorMatrix", "vec_norm", "dual_space",
    "ball_extreme_points", "symmetric_extreme_points", "op_norm",
]
