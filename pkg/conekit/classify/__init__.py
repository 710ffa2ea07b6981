# conekit/classify/__init__.py
from conekit.classify.central import (
    ANCHORS, SQUARE_ANCHOR, CentralMap, ClassificationReport, ClassResult, MapClass,
    Verdict, alpha_square, classify_central, square_max_ea_central,
)
from conekit.classify.factorization import (
    PietschFactorization, central_factorization, clifford_generators,
    pietsch_factorization, random_pietsch_factors, two_summing_factorization,
)
from conekit.classify.falsify import (
    ConvexityRecord, ConvexitySearch, Witness, factorization_lor_eb, lor_ea_convexity_search,
    lor_ea_product_check, lor_eb_falsify, sample_legs_from, sample_legs_into,
)

__all__ = [
    "ANCHORS", "SQUARE_ANCHOR", "CentralMap", "ClassificationReport", "ClassResult",
    "MapClass", "Verdict", "alpha_square", "classify_central", "square_max_ea_central",
    "PietschFactorization", "central_factorization", "clifford_generators",
    "pietsch_factorization", "random_pietsch_factors", "two_summing_factorization",
    "ConvexityRecord", "ConvexitySearch", "Witness", "factorization_lor_eb",
    "lor_ea_convexity_search", "lor_ea_product_check", "lor_eb_falsify",
    "sample_legs_from", "sample_legs_into",
]
