"""Noncommutative-plane Dirac and Pauli spectra in a truncated oscillator basis.

Layout: :mod:`~ncdirac.spinor_algebra` (Dirac/Pauli matrix representation and
identities), :mod:`~ncdirac.phase_space` (deformed commutators, Bopp shift,
star product), :mod:`~ncdirac.hamiltonians` (matrix builders),
:mod:`~ncdirac.limits` (convergence / elimination / sweep studies), and
:mod:`~ncdirac.cli` (the ``ncdirac`` command).
"""

from .spinor_algebra import (
    SpinorRep,
    standard_rep,
    clifford_residual,
    pauli_identity_residual,
    sigma_dot,
    alpha_dot,
)
from .phase_space import (
    NCParams,
    BasisSpec,
    OperatorSet,
    build_canonical_ops,
    bopp_shift,
    commutator,
    hbar_eff,
    interior_mask,
    shell_mask,
    nc_algebra_report,
    PolySymbol,
    star_product,
    star_first_order,
    moyal_bracket,
)
from .hamiltonians import (
    PhysParams,
    EMPotential,
    HamiltonianMatrix,
    SeriesDivergenceError,
    dirac_h,
    nc_dirac_h,
    rest_frame_h,
    rest_frame_spectrum,
    pauli_h_full,
    pauli_h_linear,
    nc_pauli_h,
    nc_pauli_h_exact,
    q_eta,
    q_theta,
    q_theta_pauli,
)
from .limits import (
    Scenario,
    Spectrum,
    ConvergenceReport,
    EliminationReport,
    ResultTable,
    spectrum,
    eliminate_small_component,
    elimination_scan,
    nonrel_convergence,
    nc_shift_sweep,
    perturbation_slopes,
    series_truncation_error,
    landau_table,
    relativistic_landau_level,
)

__version__ = "0.1.0"

__all__ = [
    "SpinorRep", "standard_rep", "clifford_residual", "pauli_identity_residual",
    "sigma_dot", "alpha_dot",
    "NCParams", "BasisSpec", "OperatorSet", "build_canonical_ops", "bopp_shift",
    "commutator", "hbar_eff", "interior_mask", "shell_mask", "nc_algebra_report",
    "PolySymbol", "star_product", "star_first_order", "moyal_bracket",
    "PhysParams", "EMPotential", "HamiltonianMatrix", "SeriesDivergenceError",
    "dirac_h", "nc_dirac_h", "rest_frame_h", "rest_frame_spectrum",
    "pauli_h_full", "pauli_h_linear", "nc_pauli_h", "nc_pauli_h_exact",
    "q_eta", "q_theta", "q_theta_pauli",
    "Scenario", "Spectrum", "ConvergenceReport", "EliminationReport",
    "ResultTable", "spectrum", "eliminate_small_component", "elimination_scan",
    "nonrel_convergence", "nc_shift_sweep", "perturbation_slopes",
    "series_truncation_error", "landau_table", "relativistic_landau_level",
    "__version__",
]
