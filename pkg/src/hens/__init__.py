"""Hamiltonian-ensemble simulation of qubit dephasing and its nonclassicality.

The library evolves open-qubit dephasing dynamics three equivalent ways
(ensemble averages, an explicit classical dilation, a time-local master
equation), recovers the simulating (quasi-)probability distribution from a
dephasing factor by Fourier inversion, and witnesses nonclassicality through
negativity of that distribution and failure of positive definiteness.
"""

from .qdyn import (
    DensityMatrix,
    DimensionError,
    HermitianOperator,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    evolve_unitary,
    identity_operator,
    maximally_mixed,
    partial_trace,
    pure_state,
    tensor,
    trace_distance,
)
from .ensemble import (
    Dilation,
    HamiltonianEnsemble,
    SpectralEnsemble,
    cnot_ensemble,
    cnot_mixture,
    dilate,
    he_average,
    joint_evolve_reduce,
    mc_average,
    sample_frequencies,
    spectral_average,
)
from .dephasing import (
    CoefficientSingularityError,
    DephasingSeries,
    SpectralDensityModel,
    decoherence_exponent,
    dephasing_conventional,
    dephasing_extended,
    extended_coherence,
    extended_phase,
    master_coeffs,
    ohmic_series,
    propagate_master,
    time_grid,
)
from .inversion import (
    BochnerReport,
    QuasiDistribution,
    SeriesSymmetryError,
    bochner_search,
    bochner_witness,
    forward_ft,
    inverse_ft,
    negativity_landscape,
    roundtrip_error,
)

__version__ = "0.1.0"

__all__ = [
    "BochnerReport",
    "CoefficientSingularityError",
    "DensityMatrix",
    "DephasingSeries",
    "Dilation",
    "DimensionError",
    "HamiltonianEnsemble",
    "HermitianOperator",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "QuasiDistribution",
    "SeriesSymmetryError",
    "SpectralDensityModel",
    "SpectralEnsemble",
    "bochner_search",
    "bochner_witness",
    "cnot_ensemble",
    "cnot_mixture",
    "decoherence_exponent",
    "dephasing_conventional",
    "dephasing_extended",
    "dilate",
    "evolve_unitary",
    "extended_coherence",
    "extended_phase",
    "forward_ft",
    "he_average",
    "identity_operator",
    "inverse_ft",
    "joint_evolve_reduce",
    "master_coeffs",
    "maximally_mixed",
    "mc_average",
    "negativity_landscape",
    "ohmic_series",
    "partial_trace",
    "propagate_master",
    "pure_state",
    "roundtrip_error",
    "sample_frequencies",
    "spectral_average",
    "tensor",
    "time_grid",
    "trace_distance",
]
