"""Atom-atom entanglement mediated by coherent and squeezed micromaser cavity fields.

Two excited two-level atoms cross a lossless single-mode cavity one after the
other.  The resonant Jaynes-Cummings interaction entangles them through the
field; this package computes the emerging mixed two-atom state and its
Wootters concurrence / entanglement of formation for coherent and squeezed
coherent cavity fields, together with an independent Fock-space oracle and a
CSV-emitting command line.
"""

from .dynamics import BASIS, GammaCoefficients, assemble_rho, gamma_coefficients
from .entanglement import (
    EntanglementResult,
    binary_entropy,
    concurrence,
    entanglement_of_formation,
    eof_from_concurrence,
    spin_flipped,
    symmetric_eigen,
)
from .errors import CaventError, NumericsError, ParameterError
from .fields import (
    CoherentParams,
    PhotonDistribution,
    QuadratureVariances,
    SqueezedParams,
    coherent_distribution,
    mean_photon,
    quadrature_variances,
    solve_alpha_for_mean,
    squeezed_distribution,
)
from .oracle import TripartiteState, quartic_eigenvalues, trace_out_field, tripartite_state
from .cli import (
    CompareResult,
    OracleReport,
    SweepConfig,
    SweepRow,
    run_compare,
    run_oracle_check,
    run_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BASIS",
    "CaventError",
    "CoherentParams",
    "CompareResult",
    "EntanglementResult",
    "GammaCoefficients",
    "NumericsError",
    "OracleReport",
    "ParameterError",
    "PhotonDistribution",
    "QuadratureVariances",
    "SqueezedParams",
    "SweepConfig",
    "SweepRow",
    "TripartiteState",
    "assemble_rho",
    "binary_entropy",
    "coherent_distribution",
    "concurrence",
    "entanglement_of_formation",
    "eof_from_concurrence",
    "gamma_coefficients",
    "mean_photon",
    "quadrature_variances",
    "quartic_eigenvalues",
    "run_compare",
    "run_oracle_check",
    "run_sweep",
    "solve_alpha_for_mean",
    "spin_flipped",
    "squeezed_distribution",
    "symmetric_eigen",
    "trace_out_field",
    "tripartite_state",
    "__version__",
]
