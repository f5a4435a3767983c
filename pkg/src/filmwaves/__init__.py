"""Solvers for a 4x4 hyperbolic system of two-layer thin-film flow.

The conserved variables are the two film heights and the two bulk
solute-concentration gradients, ``U = (f, b, g, q)``. The package
provides the closed-form eigenstructure, an invariant coordinate change,
a family of entropy / entropy-flux pairs with a strictly convex member,
all six elementary wave curves, an exact Riemann solver with self-similar
sampling, and first-order Godunov and Lax-Friedrichs finite-volume
schemes built on top of it.
"""

from .entropy import (
    EntropyGenerators,
    EntropyPairValue,
    compatibility_residual,
    convex_entropy,
    convex_generators,
    entropy_pair,
    hessian_quadratic_forms,
    polynomial_generators,
    psi_consistency_residual,
    shock_entropy_production,
    zero_generators,
)
from .errors import (
    AdmissibilityError,
    BracketError,
    CellPositivityError,
    ConfigError,
    FilmwavesError,
    InversionError,
    WaveOrderingError,
    WrongBranchError,
)
from .fvm import (
    CellField,
    Grid1D,
    RunDiagnostics,
    Scheme,
    SchemeConfig,
    bump_ic,
    cfl_dt,
    gaussian_pulse_ic,
    godunov_flux,
    init_field,
    l1_error,
    lxf_flux,
    riemann_ic,
    run,
    step,
)
from .riemann import (
    RiemannFan,
    WavePattern,
    classify,
    classify_wave4,
    intermediate_states,
    sample,
    sample_profile,
    solve,
    solve_gm,
)
from .state import EPS_HYP, AdmissibilityLevel, State, is_admissible, strict_margin
from .system import (
    EigenDecomposition,
    InvariantCoords,
    char_field_indicator,
    eigen,
    eigenvalues,
    flux,
    flux_parts,
    from_invariants,
    jacobian,
    scaled_eigenvectors,
    to_invariants,
)
from .wavecurves import (
    WaveFamily,
    WaveJump,
    contact1,
    contact3,
    lax_admissible,
    raref2,
    rh_residual,
    shock2,
    temple4,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
