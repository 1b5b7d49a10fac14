"""
The classical projector G on the even sphere, evaluated at a point.

    G_0     = 1 - t
    G_(k+1) = [[G_k,       conj(a_(k+1)) I],
               [a_(k+1) I, 1 - G_k       ]]

At a point with sum |a_i|^2 = t (1 - t) this is an idempotent of rank 2^(n-1).
"""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from src.config import settings
from src.exceptions import OffSphereError
from src.models.numerics import ClassicalProjector

logger = logging.getLogger(__name__)

SPHERE_TOLERANCE = 1e-12


def sphere_defect(t: float, a: Sequence[complex]) -> float:
    """|sum |a_i|^2 - t (1 - t)|."""
    return abs(float(np.sum(np.abs(np.asarray(a, dtype=complex)) ** 2)) - t * (1.0 - t))


def classical_G(n: int, t: float, a: Sequence[complex]) -> ClassicalProjector:
    """
    Evaluate the classical projector at (t, a_1, ..., a_n).

    Args:
        n: Sphere dimension parameter
        t: Real coordinate in [0, 1]
        a: n complex coordinates

    Returns:
        ClassicalProjector with the matrix, its idempotency defect, trace and rank

    Raises:
        ValueError: If len(a) != n
        OffSphereError: If the point is off the sphere by more than 1e-12

    Example:
        >>> classical_G(1, 0.0, [0j]).trace
        1.0
    """
    if len(a) != n:
        raise ValueError(f"Expected {n} coordinates a_i, got {len(a)}")
    defect = sphere_defect(t, a)
    if defect > SPHERE_TOLERANCE:
        raise OffSphereError(f"Point is off the sphere: |sum |a|^2 - t(1-t)| = {defect:.3e}")

    G = np.array([[1.0 - t]], dtype=complex)
    for a_k in a:
        identity = np.eye(G.shape[0], dtype=complex)
        G = np.block([[G, np.conj(a_k) * identity], [a_k * identity, identity - G]])

    idempotency = float(np.linalg.norm(G @ G - G))
    trace = float(np.trace(G).real)
    rank = int(np.linalg.matrix_rank(G, tol=1e-8))
    logger.debug(f"Classical G at t={t}: defect {idempotency:.3e}, trace {trace}, rank {rank}")
    return ClassicalProjector(n=n, matrix=G, idempotency_defect=idempotency, trace=trace, rank=rank)


def random_sphere_point(
    n: int, rng: Optional[np.random.Generator] = None
) -> Tuple[float, np.ndarray]:
    """
    A random point (t, a) of the even sphere.

    t is uniform in [0, 1]; a is a uniformly oriented complex vector of norm sqrt(t (1 - t)).
    """
    rng = rng or np.random.default_rng(settings.random_seed)
    t = float(rng.uniform(0.0, 1.0))
    direction = rng.normal(size=n) + 1j * rng.normal(size=n)
    direction /= np.linalg.norm(direction)
    return t, direction * np.sqrt(t * (1.0 - t))
