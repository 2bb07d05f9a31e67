"""setfix: fixed points of set-valued contraction maps on finite metric spaces.

Computes Hausdorff distances exactly on finite sets, certifies or refutes
contraction hypotheses by exhaustive pair checking, runs the constructive
successor iteration with a full audit trace, and cross-checks everything
against a deliberately naive brute-force oracle.
"""

from .coeffs import (
    CoefficientError,
    CoefficientTriple,
    HypothesisReport,
    PiecewiseAffineFn,
    alpha_prime,
    check_generalized_hypotheses,
    contraction_ratio,
    right_limsup_ratio,
)
from .conditions import (
    AffineMap,
    AlphaBetaFunctional,
    CheckReport,
    ConditionError,
    ConstantGeneralized,
    EuclideanSupportMap,
    Generalized,
    HardyRogers,
    MizoguchiTakahashi,
    Nadler,
    Reich,
    ReichFunctional,
    SetValuedMap,
    TableMap,
    Witness,
    as_generalized,
    check_condition,
    check_single_valued_hardy_rogers,
)
from .kernels import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .metric import (
    CompactSet,
    EuclideanSpace,
    FiniteMatrixSpace,
    MetricError,
    MetricSpace,
    Point,
    distance,
    hausdorff_distance,
    point_to_set_distance,
)
from .oracle import (
    CrossValidation,
    FalsificationError,
    OracleReport,
    brute_force_fixed_points,
    cross_validate,
    naive_hausdorff,
    random_admissible_constants,
    random_contractive_map,
    random_map,
    random_metric,
    random_subset,
)
from .scenario import Scenario, ScenarioError, parse_scenario
from .solver import (
    CONVERGED,
    MAX_ITER,
    STAGNATION,
    TOLERANCE,
    IterationTrace,
    RateWitness,
    SolverError,
    extract_rate_witness,
    iterate,
    select_next,
    verify_cauchy_bound,
    verify_limit_residual,
)

__version__ = "0.1.0"
