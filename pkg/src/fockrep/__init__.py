"""Truncated Fock-space representations, character traces and the psi^m basis."""

from src.fockrep.basis import (
    creation_vector,
    lowering_coefficient,
    lowering_coefficient_check,
    multi_indices,
    normalization_constant,
    psi_gram,
    psi_vector,
)
from src.fockrep.fredholm import FredholmModule
from src.fockrep.representation import (
    FockRepresentation,
    SpectrumReport,
    adjoint_residual,
    char_trace,
    get_representation,
    homomorphism_residual,
    q_pochhammer,
    relation_residual,
    represent,
    represent_word,
    sigma1,
    spectrum_check,
    verify_relations,
)
from src.fockrep.space import SparseOperator, TruncatedFock

__all__ = [
    "FockRepresentation",
    "FredholmModule",
    "SparseOperator",
    "SpectrumReport",
    "TruncatedFock",
    "adjoint_residual",
    "char_trace",
    "creation_vector",
    "get_representation",
    "homomorphism_residual",
    "lowering_coefficient",
    "lowering_coefficient_check",
    "multi_indices",
    "normalization_constant",
    "psi_gram",
    "psi_vector",
    "q_pochhammer",
    "relation_residual",
    "represent",
    "represent_word",
    "sigma1",
    "spectrum_check",
    "verify_relations",
]
