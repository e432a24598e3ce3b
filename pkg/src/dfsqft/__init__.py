"""Noise-protected quantum Fourier transforms over decoherence-free subspaces.

A small numpy toolkit that synthesizes QFT circuits — plain, and encoded
against weak (dephasing-only) or strong (full collective) decoherence —
simulates them on dense state vectors, and verifies every construction
to machine precision: logical gate actions, noise invariance, subspace
restrictions against the DFT matrix, and sector dimension formulas.
"""
from .circuits import (
    Circuit,
    CircuitParseError,
    Gate,
    cn,
    cr,
    h,
    invert,
    p,
    parse_circuit,
    print_circuit,
    r,
)
from .dfs import (
    CollectiveModel,
    DfsReport,
    brute_force_max_dfs_dimension,
    collective_operator,
    dfs_basis,
    dfs_report,
    eta_max,
    max_dfs_dimension,
    min_physical_qubits,
    wcd_sector_dimensions,
)
from .noise import (
    ENDPOINTS_ONLY,
    GRANULARITIES,
    PER_ELEMENTARY_GATE,
    PER_LOGICAL_BLOCK,
    NoiseEvent,
    NoisePolicy,
    RunReport,
    apply_noise,
    noisy_run,
    sample_event,
    single_qubit_rotation,
)
from .qft import (
    ConventionError,
    GateFactory,
    OutputOrder,
    bit_reversal_permutation,
    dft_matrix,
    logical_block_boundaries,
    resolve_output_order,
    synth_logical_qft,
    synth_qft,
    trivial_factory,
)
from .scd import (
    ConventionReport,
    ScdAngles,
    ScdConvention,
    ScdRegister,
    convention_report,
    resolve_convention,
    scd_block_transform,
    scd_factory,
    scd_hadamard,
    scd_logical_basis,
    scd_logical_state,
    scd_phase,
    scd_qft_block_boundaries,
    scd_transform_matrix,
    synth_qft_scd,
)
from .statevector import (
    StateVector,
    SubspaceBasis,
    apply_circuit,
    apply_gate,
    circuit_unitary,
    equal_up_to_global_phase,
    fidelity,
    global_phase_agreement,
    is_unitary,
    restrict,
    unitarity_defect,
)
from .wcd import (
    WcdRegister,
    synth_qft_wcd,
    wcd_encoder_circuit,
    wcd_factory,
    wcd_hadamard,
    wcd_logical_basis,
    wcd_logical_state,
    wcd_phase,
    wcd_qft_block_boundaries,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # circuits
    "Gate", "Circuit", "CircuitParseError", "h", "cn", "r", "p", "cr",
    "invert", "parse_circuit", "print_circuit",
    # statevector
    "StateVector", "SubspaceBasis", "apply_gate", "apply_circuit",
    "circuit_unitary", "fidelity", "restrict", "is_unitary",
    "unitarity_defect", "global_phase_agreement", "equal_up_to_global_phase",
    # qft
    "dft_matrix", "synth_qft", "synth_logical_qft", "GateFactory",
    "trivial_factory", "logical_block_boundaries", "resolve_output_order",
    "OutputOrder", "bit_reversal_permutation", "ConventionError",
    # dfs
    "CollectiveModel", "DfsReport", "collective_operator", "dfs_basis",
    "dfs_report", "max_dfs_dimension", "brute_force_max_dfs_dimension",
    "wcd_sector_dimensions", "eta_max", "min_physical_qubits",
    # wcd
    "WcdRegister", "wcd_logical_state", "wcd_logical_basis", "wcd_hadamard",
    "wcd_phase", "wcd_encoder_circuit", "wcd_factory", "synth_qft_wcd",
    "wcd_qft_block_boundaries",
    # scd
    "ScdRegister", "ScdAngles", "ScdConvention", "ConventionReport",
    "scd_logical_state", "scd_logical_basis", "scd_block_transform",
    "resolve_convention", "convention_report", "scd_transform_matrix",
    "scd_hadamard", "scd_phase", "scd_factory", "synth_qft_scd",
    "scd_qft_block_boundaries",
    # noise
    "NoiseEvent", "NoisePolicy", "RunReport", "apply_noise", "noisy_run",
    "sample_event", "single_qubit_rotation", "GRANULARITIES",
    "PER_ELEMENTARY_GATE", "PER_LOGICAL_BLOCK", "ENDPOINTS_ONLY",
]
