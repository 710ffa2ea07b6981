# conekit/cones/__init__.py
from conekit.cones.core import (
    ConeKind, ConeDescriptor, ConeMap, member, dual_cone, random_member, lorentz_map,
)
from conekit.cones.hermitian import (
    hermitian_basis, vectorize, devectorize, superoperator, superoperator_from_map,
    choi_matrix, partial_transpose, bloch_iso, bloch_matrix,
)
from conekit.cones.tensors import (
    Tensor2, identity_tensor, j_matrix, j_map, j_hat, max_member_lorentz,
)

__all__ = [
    "ConeKind", "ConeDescriptor", "ConeMap", "member", "dual_cone", "random_member",
    "lorentz_map", "hermitian_basis", "vectorize", "devectorize", "superoperator",
    "superoperator_from_map", "choi_matrix", "partial_transpose", "bloch_iso",
    "bloch_matrix", "Tensor2", "identity_tensor", "j_matrix", "j_map", "j_hat",
    "max_member_lorentz",
]
