# conekit/lorentzmaps/__init__.py
from conekit.lorentzmaps.automorphisms import (
    LorentzAutomorphism, boost, spatial, decompose_automorphism, is_automorphism,
    boost_to_e0, random_automorphism,
)
from conekit.lorentzmaps.positivity import (
    is_lorentz_positive, is_interior_positive, s_procedure_margin,
    sample_boundary_rays, lorentz_margin,
)
from conekit.lorentzmaps.sinkhorn import SinkhornForm, central_matrix, sinkhorn_normal_form
from conekit.lorentzmaps.criteria import max_ea_criterion, is_eb_lorentz, j_eigenvalues
from conekit.lorentzmaps.retract import Retract, retract_maps
from conekit.lorentzmaps.extreme import (
    LorentzFactorizableDiag, extreme_pos0, extreme_pos_w, kw_extreme_sampler, in_kw,
    lorentz_factorizable_block,
)
from conekit.lorentzmaps.sampling import (
    DressedMap, dressed_central, random_diagonal_contraction, random_positive_lorentz,
    random_central_lorentz,
)

__all__ = [
    "LorentzAutomorphism", "boost", "spatial", "decompose_automorphism",
    "is_automorphism", "boost_to_e0", "random_automorphism",
    "is_lorentz_positive", "is_interior_positive", "s_procedure_margin",
    "sample_boundary_rays", "lorentz_margin",
    "SinkhornForm", "central_matrix", "sinkhorn_normal_form",
    "max_ea_criterion", "is_eb_lorentz", "j_eigenvalues",
    "Retract", "retract_maps",
    "LorentzFactorizableDiag", "extreme_pos0", "extreme_pos_w", "kw_extreme_sampler",
    "in_kw", "lorentz_factorizable_block",
    "DressedMap", "dressed_central", "random_diagonal_contraction",
    "random_positive_lorentz", "random_central_lorentz",
]
