"""Bound states, normalized wave functions and su(1,1) ladder operators of the
screened two-term diatomic molecular potential."""

from ._ttmol import (  # noqa: F401
    BoundState,
    CasimirPair,
    CommutatorResiduals,
    FamilyFunction,
    FamilyState,
    LadderAction,
    LadderCoeffs,
    NormConvention,
    NuIntermediates,
    OracleSpectrum,
    PotentialParams,
    RadialGrid,
    ScaledParams,
    WaveState,
    annihilation_residual,
    apply_lower,
    apply_raise,
    casimir_eigenvalue,
    casimir_orderings,
    closed_form_norm,
    commutator_check,
    eigenstate,
    energy_level,
    eval_r,
    eval_x,
    family_eval,
    from_molecular,
    gauss_2f1,
    gen_binomial,
    index_A,
    integrate,
    is_hulthen_limit,
    jacobi_derivative,
    jacobi_eval,
    kappa_coeffs,
    level_grid,
    ln_gamma,
    lower_residual,
    make_family_state,
    normalize_unit_interval,
    normalize_radial,
    nu_intermediates,
    num_bound_states,
    orthogonality_residual,
    overlap_with_analytic,
    potential_eval,
    quantization_residual,
    raise_residual,
    richardson,
    run_cli,
    scale,
    scale_energy,
    scaled_potential,
    solve_radial,
    unscale_energy,
    weight_eigenvalue,
    well_strength,
)

__version__ = "0.1.0"
