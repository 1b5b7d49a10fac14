"""Recursive projectors over the quantum spheres and their pairings."""

from src.ktheory.classical import classical_G, random_sphere_point, sphere_defect
from src.ktheory.matrices import DiagonalScaler, NCMatrix, ScalingAutomorphism
from src.ktheory.pairing import pair_charge, pair_epsilon, pairing_cross_check, trace_at_q_one
from src.ktheory.projectors import (
    build_e,
    build_G,
    check_defect,
    check_idempotency,
    check_lemma_M,
    check_quotient_defect,
    defect_rhs,
    expected_trace,
    matrix_trace,
    omega,
)

__all__ = [
    "DiagonalScaler",
    "NCMatrix",
    "ScalingAutomorphism",
    "build_G",
    "build_e",
    "check_defect",
    "check_idempotency",
    "check_lemma_M",
    "check_quotient_defect",
    "classical_G",
    "defect_rhs",
    "expected_trace",
    "matrix_trace",
    "omega",
    "pair_charge",
    "pair_epsilon",
    "pairing_cross_check",
    "random_sphere_point",
    "sphere_defect",
    "trace_at_q_one",
]
