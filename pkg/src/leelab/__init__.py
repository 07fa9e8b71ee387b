"""Desk-scale workbench for Lee-metric coding theory.

Exact volumes and intersections of Lee balls, code-size bounds, container
algorithms for counting error-correcting codes, and bipartite density
bounds, with every closed form cross-checked against brute-force oracles.
"""

from .core import (
    Composition,
    Space,
    Word,
    average_lee_weight,
    binom,
    count_all_compositions,
    count_weight_compositions,
    iter_words,
    lee_composition,
    lee_distance,
    lee_weight,
)
from .errors import CapacityError, ConstantSearchError, DomainError, InvariantViolation
from .volumes import (
    ball_volume,
    ball_volume_closed_form,
    closed_form_report,
    estimate_constant_cm,
    volume_bounds,
    volume_ratio_factor,
)
from .intersections import (
    common_neighborhood_count,
    intersection_closed_form_dist1,
    intersection_estimate,
    intersection_size,
    intersection_upper_bound,
)
from .bounds import (
    BoundReport,
    elias_bound,
    elias_bound_preset,
    gv_radius,
    hamming_bound,
    max_code_size_exact,
    plotkin_like_bound,
)
from .container import (
    ContainerRun,
    LeeGraph,
    build_container_family,
    build_lee_graph,
    count_independent_sets,
    degree_profile,
    enumerate_independent_sets,
    independence_polynomial,
    run_algorithm1,
    run_algorithm2,
    supersaturation_report,
)
from .density import (
    AssociationSpec,
    DensityBounds,
    alpha_regular_bounds,
    gaussian_binomial,
    linear_code_bounds,
    linear_density_bounds,
    linear_density_exact,
    nonlinear_code_bounds,
    nonlinear_density_bounds,
    nonlinear_density_exact,
    plotkin_attaining_density_upper,
    trend_scan,
)
from .compare import compare_cell, compare_table

__version__ = "0.1.0"

__all__ = [
    "AssociationSpec",
    "BoundReport",
    "CapacityError",
    "Composition",
    "ConstantSearchError",
    "ContainerRun",
    "DensityBounds",
    "DomainError",
    "InvariantViolation",
    "LeeGraph",
    "Space",
    "Word",
    "alpha_regular_bounds",
    "average_lee_weight",
    "ball_volume",
    "ball_volume_closed_form",
    "binom",
    "build_container_family",
    "build_lee_graph",
    "closed_form_report",
    "common_neighborhood_count",
    "compare_cell",
    "compare_table",
    "count_all_compositions",
    "count_independent_sets",
    "count_weight_compositions",
    "degree_profile",
    "elias_bound",
    "elias_bound_preset",
    "enumerate_independent_sets",
    "estimate_constant_cm",
    "gaussian_binomial",
    "gv_radius",
    "hamming_bound",
    "independence_polynomial",
    "intersection_closed_form_dist1",
    "intersection_estimate",
    "intersection_size",
    "intersection_upper_bound",
    "iter_words",
    "lee_composition",
    "lee_distance",
    "lee_weight",
    "linear_code_bounds",
    "linear_density_bounds",
    "linear_density_exact",
    "max_code_size_exact",
    "nonlinear_code_bounds",
    "nonlinear_density_bounds",
    "nonlinear_density_exact",
    "plotkin_attaining_density_upper",
    "plotkin_like_bound",
    "run_algorithm1",
    "run_algorithm2",
    "supersaturation_report",
    "trend_scan",
    "volume_bounds",
    "volume_ratio_factor",
]
