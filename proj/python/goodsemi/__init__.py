"""Good semigroups of N^s: validation, duality, distances and Poincare polynomials."""

from ._core import (
    BudgetExceeded,
    Error,
    Ideal,
    Semigroup,
    ValidationError,
    __version__,
    check_symmetry_theorem,
    delta_nonempty,
    difference,
    element_distance,
    enumerate_good,
    enumerate_ideals,
    filtration_distance,
    ideal_distance,
    is_canonical,
    is_subset,
    loads,
    numerical,
    product,
    render,
    search,
    symmetry_report,
)

__all__ = [
    "BudgetExceeded",
    "Error",
    "Ideal",
    "Semigroup",
    "ValidationError",
    "__version__",
    "check_symmetry_theorem",
    "delta_nonempty",
    "difference",
    "element_distance",
    "enumerate_good",
    "enumerate_ideals",
    "filtration_distance",
    "ideal_distance",
    "is_canonical",
    "is_subset",
    "loads",
    "numerical",
    "product",
    "render",
    "search",
    "symmetry_report",
]
