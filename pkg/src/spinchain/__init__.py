"""Quantum state transfer through spin-1/2 XX chains.

Single-excitation dynamics of open chains with engineered or
boundary-controlled couplings, plus tooling for disorder-averaged transfer
fidelity: ensemble sweeps, iso-fidelity contours, scaling-law fits, and
robustness crossovers between coupling schemes.
"""

from .profiles import (
    CouplingProfile,
    ReconstructionError,
    SpectrumTarget,
    alpha_boundary_profile,
    homogeneous_profile,
    power_law_spectrum,
    profile_from_record,
    profile_to_record,
    pst_linear_profile,
    pst_quadratic_profile,
    solve_persymmetric_jacobi,
)
from .dynamics import (
    SpectralData,
    TransferCurve,
    averaged_fidelity,
    amplitude_double_sum,
    curve_from_csv,
    curve_to_csv,
    diagonalize,
    fidelity_curve,
    site_amplitudes,
    transfer_amplitude,
)
from .disorder import (
    DisorderSpec,
    EnsembleResult,
    ensemble_fidelity,
    perturb,
)
from .experiments import (
    AlphaOptimum,
    ContourFit,
    DEFAULT_EPSILON_GRID,
    FitError,
    InsufficientDataError,
    PeakSearchError,
    SweepRow,
    SweepTable,
    SystemKind,
    analytic_tau_estimate,
    contour_fit_from_json,
    derive_cell_seed,
    extract_contour,
    find_crossover,
    fit_power_law,
    optimize_alpha,
    run_sweep,
    sweep_table_from_csv,
    sweep_table_to_csv,
    transfer_time,
)

__version__ = "0.1.0"
