"""Classical Poisson geometry: bracket tables, the suspension map and leaf checks."""

from src.poisson.classical import ClassicalPoly, ClassicalRing
from src.poisson.leaves import (
    pfaffian_oracle_error,
    pfaffian_recursive,
    random_chart_point,
    structure_matrix,
)
from src.poisson.structures import (
    PoissonKind,
    PoissonStructure,
    ReductionRule,
    bracket,
    chart_plane,
    even_sphere_coinduced,
    get_structure,
    podles_standard,
    product_podles,
)
from src.poisson.suspension import (
    check_jacobi,
    generator_pairs,
    is_casimir_ideal,
    north_pole_degeneracy,
    phi_pushforward,
    suspension_images,
    verify_poisson_map,
    verify_sphere_constraint,
)

__all__ = [
    "ClassicalPoly",
    "ClassicalRing",
    "PoissonKind",
    "PoissonStructure",
    "ReductionRule",
    "bracket",
    "chart_plane",
    "check_jacobi",
    "even_sphere_coinduced",
    "generator_pairs",
    "get_structure",
    "is_casimir_ideal",
    "north_pole_degeneracy",
    "pfaffian_oracle_error",
    "pfaffian_recursive",
    "phi_pushforward",
    "podles_standard",
    "product_podles",
    "random_chart_point",
    "structure_matrix",
    "suspension_images",
    "verify_poisson_map",
    "verify_sphere_constraint",
]
