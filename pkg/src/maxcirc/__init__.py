"""Max-times (tropical) algebra for circulant matrices, in exact rationals.

Spectral data, matrix-power periodicity, attraction cones, two-sided
max-linear feasibility, and the six interval-robustness classifiers.
"""

from .attraction import (
    InclusionVerdict,
    attraction_system,
    attraction_system_for_matrix,
    cancel_reduce,
    check_attraction_inclusion,
    in_attraction_cone,
    in_attraction_cone_matrix,
    is_kleene_star,
    kleene_star,
    reduced_attraction_system,
)
from .circulant import (
    Circulant,
    CircSpectral,
    circ_critical_components,
    circ_lambda,
    circ_mul,
    circ_period,
    circ_power,
    circ_spectral,
    circulant_row_of,
    expand,
)
from .core import (
    DimensionMismatch,
    InternalError,
    MaxMatrix,
    MaxVector,
    as_scalar,
    exact_kth_root,
    mat_mul,
    mat_power,
    mat_vec,
    orbit,
)
from .digraph import (
    CriticalStructure,
    CycleMean,
    Digraph,
    associated_digraph,
    critical_structure,
    digraph_cyclicity,
    is_completely_reducible,
    max_cycle_mean,
    solvable_congruence,
    strongly_connected_components,
    threshold_digraph,
)
from .intervals import Box, ScalarInterval
from .periodicity import PeriodicityInfo, orbit_period, transient_and_period
from .robustness import (
    IntervalCirculant,
    RobustnessReport,
    Verdict,
    classify,
    corner_matrix,
    corner_vector,
    decompose_in_box,
    envelope_circulant,
    envelope_in_interval,
    implication_violations,
)
from .twosided import (
    FeasibilityResult,
    IterationCapExceeded,
    TwoSidedSystem,
    feasible_in_box,
    greatest_solution_leq,
    max_form,
    satisfies,
    simultaneous_feasible,
)

__version__ = "0.1.0"

__all__ = [
    "Box",
    "CircSpectral",
    "Circulant",
    "CriticalStructure",
    "CycleMean",
    "Digraph",
    "DimensionMismatch",
    "FeasibilityResult",
    "InclusionVerdict",
    "InternalError",
    "IntervalCirculant",
    "IterationCapExceeded",
    "MaxMatrix",
    "MaxVector",
    "PeriodicityInfo",
    "RobustnessReport",
    "ScalarInterval",
    "TwoSidedSystem",
    "Verdict",
    "as_scalar",
    "associated_digraph",
    "attraction_system",
    "attraction_system_for_matrix",
    "cancel_reduce",
    "check_attraction_inclusion",
    "circ_critical_components",
    "circ_lambda",
    "circ_mul",
    "circ_period",
    "circ_power",
    "circ_spectral",
    "circulant_row_of",
    "classify",
    "corner_matrix",
    "corner_vector",
    "critical_structure",
    "decompose_in_box",
    "digraph_cyclicity",
    "envelope_circulant",
    "envelope_in_interval",
    "exact_kth_root",
    "expand",
    "feasible_in_box",
    "greatest_solution_leq",
    "implication_violations",
    "in_attraction_cone",
    "in_attraction_cone_matrix",
    "is_completely_reducible",
    "is_kleene_star",
    "kleene_star",
    "mat_mul",
    "mat_power",
    "mat_vec",
    "max_cycle_mean",
    "max_form",
    "orbit",
    "orbit_period",
    "reduced_attraction_system",
    "satisfies",
    "simultaneous_feasible",
    "solvable_congruence",
    "strongly_connected_components",
    "threshold_digraph",
    "transient_and_period",
]
