"""
The normalized basis psi^m of the n-fold Fock space and the lowering formula.

    psi^m = C^m a_1*^(m_1) ... a_n*^(m_n) psi,
    C^m   = q^(-(sum m)^2 + sum m_i (m_i + 1) / 2) prod_i (q^2; q^2)_(m_i)^(-1/2)

with psi the vacuum |0, ..., 0>. Products of creation operators are taken in
increasing index order, left to right, so a_n* acts on the vacuum first.
"""

import logging
from typing import List, Sequence

import numpy as np

from src.exceptions import TruncationOverflowError
from src.fockrep.representation import get_representation, q_pochhammer
from src.ncalg import even_sphere

logger = logging.getLogger(__name__)


def _require_room(m: Sequence[int], N: int) -> None:
    if any(level < 0 for level in m):
        raise ValueError(f"Multi-index entries must be nonnegative, got {tuple(m)}")
    if sum(m) >= N - 1:
        raise TruncationOverflowError(
            f"Multi-index {tuple(m)} needs more than N = {N} levels per factor"
        )


def creation_vector(m: Sequence[int], q0: float, N: int) -> np.ndarray:
    """
    Unnormalized vector a_1*^(m_1) ... a_n*^(m_n) |0, ..., 0>.

    Raises:
        TruncationOverflowError: If sum(m) >= N - 1
    """
    _require_room(m, N)
    n = len(m)
    A = even_sphere(n)
    rep = get_representation(A, float(q0), N)
    vector = rep.space.basis_vector([0] * n)
    for i in range(n, 0, -1):
        creator = rep.generator(f"a{i}*")
        for _ in range(m[i - 1]):
            vector = creator.apply(vector)
    return vector


def normalization_constant(m: Sequence[int], q0: float) -> float:
    """C^m, the factor that makes psi^m a unit vector."""
    total = sum(m)
    exponent = -(total**2) + sum(level * (level + 1) for level in m) / 2
    scale = q0**exponent
    for level in m:
        scale /= np.sqrt(q_pochhammer(q0**2, q0**2, level))
    return float(scale)


def psi_vector(m: Sequence[int], q0: float, N: int) -> np.ndarray:
    """The normalized vector psi^m."""
    return normalization_constant(m, q0) * creation_vector(m, q0, N)


def lowering_coefficient(i: int, m: Sequence[int], q0: float) -> float:
    """
    Closed-form coefficient of a_i acting on a_1*^(m_1) ... a_n*^(m_n) psi.

        q^(3 sum_{j<i} m_j) q^(4 sum_{j>i} m_j) q^(2(m_i - 1)) (1 - q^(2 m_i))

    The coefficient vanishes when m_i = 0.
    """
    if not 1 <= i <= len(m):
        raise ValueError(f"Index i = {i} outside 1..{len(m)}")
    m_i = m[i - 1]
    if m_i == 0:
        return 0.0
    before = sum(m[: i - 1])
    after = sum(m[i:])
    return q0 ** (3 * before + 4 * after + 2 * (m_i - 1)) * (1.0 - q0 ** (2 * m_i))


def lowering_coefficient_check(i: int, m: Sequence[int], q0: float, N: int) -> float:
    """
    Compare the represented action of a_i with the closed-form lowering coefficient.

    Args:
        i: Index of the lowering generator (1-based)
        m: Creation multi-index (m_1, ..., m_n)
        q0: Deformation parameter in (0, 1)
        N: Levels per factor

    Returns:
        Euclidean norm of sigma(a_i) v_m - c v_(m - e_i)

    Raises:
        TruncationOverflowError: If sum(m) >= N - 1

    Example:
        >>> lowering_coefficient_check(1, (1,), 0.5, 10) < 1e-12
        True
    """
    _require_room(m, N)
    rep = get_representation(even_sphere(len(m)), float(q0), N)
    lowered = rep.generator(f"a{i}").apply(creation_vector(m, q0, N))

    coefficient = lowering_coefficient(i, m, q0)
    if coefficient:
        target = list(m)
        target[i - 1] -= 1
        expected = coefficient * creation_vector(target, q0, N)
    else:
        expected = np.zeros_like(lowered)
    residual = float(np.linalg.norm(lowered - expected))
    logger.debug(f"Lowering a{i} on m={tuple(m)}: coefficient {coefficient:.6g}, residual {residual:.3e}")
    return residual


def psi_gram(m_list: Sequence[Sequence[int]], q0: float, N: int) -> np.ndarray:
    """
    Gram matrix <psi^m, psi^m'> of the normalized vectors.

    Args:
        m_list: Multi-indices, all of the same length n
        q0: Deformation parameter in (0, 1)
        N: Levels per factor

    Returns:
        len(m_list) x len(m_list) real matrix (the identity when the psi^m are orthonormal)

    Raises:
        TruncationOverflowError: If some sum(m) >= N - 1
        ValueError: If the multi-indices have different lengths
    """
    if len({len(m) for m in m_list}) > 1:
        raise ValueError("All multi-indices must have the same length")
    vectors: List[np.ndarray] = [psi_vector(m, q0, N) for m in m_list]
    if not vectors:
        return np.zeros((0, 0))
    stacked = np.vstack(vectors)
    return stacked @ stacked.T


def multi_indices(n: int, max_total: int) -> List[tuple]:
    """All m in N^n with sum(m) <= max_total, by total and then lexicographically."""
    result: List[tuple] = [()]
    for _ in range(n):
        result = [m + (level,) for m in result for level in range(max_total + 1)]
    return sorted((m for m in result if sum(m) <= max_total), key=lambda m: (sum(m), m))
