"""Topological quantum compiler and fusion-space simulator for the
Fibonacci anyon model."""

from .model import Charge, Handedness, ModelConstants, model_constants, PHI, TOL
from .fusion import FusionBasis, enumerate_basis, braid_generator, word_matrix
from .words import (
    BraidWord,
    WeaveEndpoint,
    winding,
    gamma_conjugate,
    classify_endpoint,
)
from .su2 import Quaternion, su2_block, block_matrix
from .metrics import distance, leakage
from .cable import (
    StrandComposition,
    cable,
    composition_after,
    charge_projector,
)
from .encoding import QubitEncoding, computational_tree, encode_qubits
from .gates import (
    IDENTITY_2,
    NOT_GATE,
    SQRT_NOT_GATE,
    SWAP_GATE,
    controlled,
    m_gate_reference,
    cc_gate,
    ccs_from_m_gate,
    five_gate_decomposition,
)
from .search import (
    Candidate,
    InfeasibleSearchError,
    SearchResult,
    WeaveSearchSpec,
    search,
    merge,
    result_to_json,
    result_from_json,
)
from .circuits import (
    ConventionProfile,
    DEFAULT_PROFILE,
    Stage,
    GateCircuit,
    CircuitEvaluation,
    build_injection_cu,
    build_m_gate,
    build_ccs,
    build_ccs_decomposition,
    evaluate_circuit,
    evaluate_with_stage_operators,
    circuit_to_json,
    circuit_from_json,
)
from .standins import (
    rotated_frame_block,
    exact_window_operator,
    stage_operator,
    circuit_stage_operators,
)

__all__ = [
    "Charge",
    "Handedness",
    "ModelConstants",
    "model_constants",
    "PHI",
    "TOL",
    "FusionBasis",
    "enumerate_basis",
    "braid_generator",
    "word_matrix",
    "BraidWord",
    "WeaveEndpoint",
    "winding",
    "gamma_conjugate",
    "classify_endpoint",
    "Quaternion",
    "su2_block",
    "block_matrix",
    "distance",
    "leakage",
    "StrandComposition",
    "cable",
    "composition_after",
    "charge_projector",
    "QubitEncoding",
    "computational_tree",
    "encode_qubits",
    "IDENTITY_2",
    "NOT_GATE",
    "SQRT_NOT_GATE",
    "SWAP_GATE",
    "controlled",
    "m_gate_reference",
    "cc_gate",
    "ccs_from_m_gate",
    "five_gate_decomposition",
    "Candidate",
    "InfeasibleSearchError",
    "SearchResult",
    "WeaveSearchSpec",
    "search",
    "merge",
    "result_to_json",
    "result_from_json",
    "ConventionProfile",
    "DEFAULT_PROFILE",
    "Stage",
    "GateCircuit",
    "CircuitEvaluation",
    "build_injection_cu",
    "build_m_gate",
    "build_ccs",
    "build_ccs_decomposition",
    "evaluate_circuit",
    "evaluate_with_stage_operators",
    "circuit_to_json",
    "circuit_from_json",
    "rotated_frame_block",
    "exact_window_operator",
    "stage_operator",
    "circuit_stage_operators",
]

__version__ = "0.1.0"
