"""Berry phases and semiclassical energy surfaces of cavity-QED models.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its public surface.
"""

from ._core import (  # noqa: F401
    BandTrackingAmbiguity,
    BerryPhaseResult,
    BoSpinEigenstates,
    ConvergenceFailure,
    DegenerateBand,
    DegenerateParameters,
    DegeneracyReport,
    EffectiveField,
    EigenDecomposition,
    EmptyGrid,
    Grid,
    JCParams,
    LambdaParams,
    NonHermitianInput,
    RabiParams,
    RealGaugeConnection,
    StateFamily,
    SurfaceGrid,
    TruncationLeak,
    UndefinedMixingAngle,
    ValidationError,
    ZeroOverlap,
    annihilation,
    bo_spin_eigenstates_rabi,
    build_jc,
    build_jc_rotated,
    build_lambda_potential_matrix,
    build_rabi,
    build_rabi_rotated,
    ci_encircle_phase,
    creation,
    detect_degeneracy,
    effective_field,
    ground_state,
    hermitian_eig,
    jc_analytic_phase,
    jc_eigenstate_family,
    jc_surfaces,
    jt_encircle_phase,
    kron,
    lambda_surfaces,
    mod2pi_distance,
    number,
    number_expectation_phase,
    pauli,
    phase_rotation_operator,
    principal_angle,
    quadrature_p,
    quadrature_x,
    rabi_eigenstate_family,
    rabi_surfaces,
    real_gauge_connection,
    sigma_minus,
    sigma_plus,
    wilson_loop_phase,
)

__version__ = "0.1.0"
