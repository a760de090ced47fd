"""1+1D kinematics with both branches of generalized boost transformations.

The symmetric family contains the standard Lorentz boosts; the antisymmetric
family is a coordinate swap composed with a boost at inverse velocity.  The
package applies and composes transforms, classifies displacements by
coordinate speed and by interval sign, verifies the family identities
mechanically, and renders scenarios as deterministic SVG Minkowski diagrams.
"""

from .core import (
    DEFAULT_TOL,
    STANDARD_METRIC,
    SWAPPED_METRIC,
    BranchKind,
    CausalClass,
    CausalReport,
    CoordinateSpeed,
    DegenerateDisplacementError,
    DomainError,
    Metric,
    NotDecomposableError,
    SingularMatrixError,
    Transform,
    TwoVector,
    apply,
    classify_coordinate,
    classify_geometric,
    compose,
    gamma_antisymmetric,
    gamma_symmetric,
    interval_squared,
    inverse,
    k_constant,
    make_l,
    make_lambda,
    make_lambda_infinite_limit,
    measured_displacement,
    parity_conjugate,
    refit,
    swap_decompose,
    transform_metric,
)
from .diagram import (
    DiagramStyle,
    EmptyWindowError,
    OutOfWindowError,
    SvgDocument,
    annotate_events,
    clip_to_window,
    render_pair,
)
from .scenario_io import (
    ScenarioFormatError,
    load_scenario,
    save_scenario,
    scenario_from_dict,
    scenario_to_dict,
)
from .verify import CheckResult, VerificationReport, format_report, run_verification
from .worldlines import (
    FIG2_PARTICLE_SPEEDS,
    LightRayViolationError,
    Scenario,
    Window,
    Worldline,
    WorldlineKind,
    build_fig2_scenario,
    build_fig3_scenario,
    build_fig4_scenario,
    coordinate_velocity,
    rest_point_worldline,
    transform_worldline,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL",
    "STANDARD_METRIC",
    "SWAPPED_METRIC",
    "BranchKind",
    "CausalClass",
    "CausalReport",
    "CheckResult",
    "CoordinateSpeed",
    "DegenerateDisplacementError",
    "DiagramStyle",
    "DomainError",
    "EmptyWindowError",
    "FIG2_PARTICLE_SPEEDS",
    "LightRayViolationError",
    "Metric",
    "NotDecomposableError",
    "OutOfWindowError",
    "Scenario",
    "ScenarioFormatError",
    "SingularMatrixError",
    "SvgDocument",
    "Transform",
    "TwoVector",
    "VerificationReport",
    "Window",
    "Worldline",
    "WorldlineKind",
    "annotate_events",
    "apply",
    "build_fig2_scenario",
    "build_fig3_scenario",
    "build_fig4_scenario",
    "classify_coordinate",
    "classify_geometric",
    "clip_to_window",
    "compose",
    "coordinate_velocity",
    "format_report",
    "gamma_antisymmetric",
    "gamma_symmetric",
    "interval_squared",
    "inverse",
    "k_constant",
    "load_scenario",
    "make_l",
    "make_lambda",
    "make_lambda_infinite_limit",
    "measured_displacement",
    "parity_conjugate",
    "refit",
    "render_pair",
    "rest_point_worldline",
    "run_verification",
    "save_scenario",
    "scenario_from_dict",
    "scenario_to_dict",
    "swap_decompose",
    "transform_metric",
    "transform_worldline",
]
