"""Exact tameness deciders for monomial-ideal blowups.

Decides whether the blowup of affine space along a monomial ideal is regular
(tameness) via three cross-checking criteria, and emits the binomial defining
equations of the Rees algebra for tame squarefree ideals.
"""

from .charts import (
    ChartAlgebra,
    ChartReport,
    LaurentMonomial,
    chart,
    cone_membership,
    is_chart_regular,
    minimal_algebra_generators,
)
from .core import (
    Clutter,
    Monomial,
    MonomialIdeal,
    PolarizationResult,
    SimplicialComplex,
    clutter_to_ideal,
    depolarize,
    ideal_to_clutter,
    make_ideal,
    minimal_primes,
    monomial_of_set,
    open_neighborhood,
    polarize,
    product_ideal,
    stanley_reisner_complex,
)
from .newton import VertexCertificate, is_vertex, vertex_generators
from .rees import (
    Binomial,
    PartitionedClutter,
    Term,
    chart_ideal,
    dehomogenize,
    fiber_type_split,
    partitioned_clutter_from_ideal,
    partitioned_clutter_from_parts,
    rees_generators,
    swap_circuit,
    verify_rees,
)
from .tameness import (
    BipartiteProduct,
    Deg2Classification,
    LinearPrime,
    LoopedStar,
    NestedPrimeProduct,
    NotTameDeg2,
    PrimeSquare,
    TamenessReport,
    classify_deg2,
    complete_d_partite,
    decide,
    is_tame_general,
    is_tame_squarefree,
    tame_via_polarization,
)

__all__ = [
    "Binomial",
    "BipartiteProduct",
    "ChartAlgebra",
    "ChartReport",
    "Clutter",
    "Deg2Classification",
    "LaurentMonomial",
    "LinearPrime",
    "LoopedStar",
    "Monomial",
    "NestedPrimeProduct",
    "MonomialIdeal",
    "NotTameDeg2",
    "PartitionedClutter",
    "PolarizationResult",
    "PrimeSquare",
    "SimplicialComplex",
    "TamenessReport",
    "Term",
    "VertexCertificate",
    "chart",
    "chart_ideal",
    "classify_deg2",
    "clutter_to_ideal",
    "complete_d_partite",
    "cone_membership",
    "decide",
    "dehomogenize",
    "depolarize",
    "fiber_type_split",
    "ideal_to_clutter",
    "is_chart_regular",
    "is_tame_general",
    "is_tame_squarefree",
    "is_vertex",
    "make_ideal",
    "minimal_algebra_generators",
    "minimal_primes",
    "monomial_of_set",
    "open_neighborhood",
    "partitioned_clutter_from_ideal",
    "partitioned_clutter_from_parts",
    "polarize",
    "product_ideal",
    "rees_generators",
    "stanley_reisner_complex",
    "swap_circuit",
    "tame_via_polarization",
    "verify_rees",
    "vertex_generators",
]

__version__ = "0.1.0"
