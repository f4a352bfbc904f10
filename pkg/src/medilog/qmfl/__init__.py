"""Quantum semantics: effects, density operators, and shot estimation."""

from .linalg import (
    HERMITIAN_TOL,
    MAX_DIM,
    MIN_DIM,
    OFFDIAG_TOL,
    hermitian_eigenvalues,
    offdiagonal_norm,
    require_hermitian,
)
from .semantics import (
    DensityOperator,
    Effect,
    HermitianMatrix,
    PSD_TOL,
    QuantumTriple,
    RNG_ALGORITHM,
    born,
    diag_encode,
    hoeffding_margin,
    is_classical,
    mediative_effect,
    quantum_channels,
    quantum_degree,
    shot_seed,
    simulate_shots,
)

__all__ = [
    "DensityOperator",
    "Effect",
    "HERMITIAN_TOL",
    "HermitianMatrix",
    "MAX_DIM",
    "MIN_DIM",
    "OFFDIAG_TOL",
    "PSD_TOL",
    "QuantumTriple",
    "RNG_ALGORITHM",
    "born",
    "diag_encode",
    "hermitian_eigenvalues",
    "hoeffding_margin",
    "is_classical",
    "mediative_effect",
    "offdiagonal_norm",
    "quantum_channels",
    "quantum_degree",
    "require_hermitian",
    "shot_seed",
    "simulate_shots",
]
