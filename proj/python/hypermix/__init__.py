"""Operator dynamics engine.

Four operator families (coefficient shift on Taylor data, the unit-square
Laplacian on normalized bivariate polynomials, weighted translations on the
L_p and sup-norm half-line spaces) with exact right inverses, kernel
projections, and checkable witness certificates for mixing, transitivity,
zero inclusion, leading-coefficient polynomials, and periodic vectors.

Exact rational parameters (translation step, interval endpoints) cross the
boundary as strings such as "1/2" or "0.25".
"""

from ._core import (
    BallSpec,
    BivarPoly,
    BoundMode,
    CapacityError,
    CheckResult,
    DecayRow,
    DecayTable,
    GkRow,
    KernelProjection,
    LeadingPolySet,
    NoWitnessInRange,
    OperatorConfig,
    OperatorKind,
    ParseError,
    PeriodicVector,
    PiecewiseExpPoly,
    Space,
    SpaceKind,
    SpaceMismatchError,
    TaylorCoeffs,
    WitnessCertificate,
    WitnessSet,
    add,
    all_passed,
    apply_S,
    apply_T,
    ball_from_json,
    ball_json,
    check_element,
    distance,
    element_from_json,
    element_json,
    format_check_table,
    gk_density_table,
    gk_table_csv,
    hm_criterion_table,
    hm_witnesses,
    is_in_kernel,
    is_zero_element,
    iterate,
    kernel_project,
    kernel_saturation_index,
    leading_polynomials,
    norm,
    op_from_json,
    op_json,
    parse_complex_literal,
    parse_element_literal,
    periodic_json,
    periodic_vector_derivative,
    run_verify_suite,
    scale,
    stt_witness,
    sub,
    transitivity_witness,
    zero_element,
    zero_witness,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
