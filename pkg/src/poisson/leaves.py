"""
Symplectic leaf checks on the chart z_k = a_k / t.

The structure matrix S has entries S_ij = {w_i, w_j} with w = (z_1, z1*, ..., z_n, zn*).
Its Pfaffian follows the recursion Pf(S_n) = 2 Pf(S_{n-1}) (1 + sum_{l<=n} |z_l|^2),
checked against numpy's determinant through det(S) = Pf(S)^2.
"""

import logging
from typing import List, Sequence, Tuple, Union

import numpy as np

from src.models.numerics import StructureMatrixPoint
from src.poisson.structures import chart_plane

logger = logging.getLogger(__name__)

PointLike = Sequence[Union[complex, Tuple[float, float], List[float]]]


def _as_point(n: int, point: PointLike) -> List[complex]:
    values = []
    for entry in point:
        if isinstance(entry, (tuple, list)):
            if len(entry) != 2:
                raise ValueError(f"Point entries must be [re, im] pairs, got {entry!r}")
            values.append(complex(float(entry[0]), float(entry[1])))
        else:
            values.append(complex(entry))
    if len(values) != n:
        raise ValueError(f"Expected {n} complex coordinates, got {len(values)}")
    return values


def structure_matrix(n: int, point: PointLike) -> StructureMatrixPoint:
    """
    Evaluate the chart bracket table at a point.

    Args:
        n: Number of complex coordinates
        point: z_1..z_n as complex numbers or [re, im] pairs

    Returns:
        StructureMatrixPoint with the 2n x 2n antisymmetric matrix

    Example:
        >>> structure_matrix(1, [0]).matrix.real
        array([[ 0.,  2.],
               [-2.,  0.]])
    """
    z = _as_point(n, point)
    P = chart_plane(n)
    values = []
    for zk in z:
        values += [zk, zk.conjugate()]
    size = 2 * n
    matrix = np.zeros((size, size), dtype=complex)
    for i in range(size):
        for j in range(i + 1, size):
            entry = P.generator_bracket(i, j).evaluate(values)
            matrix[i, j] = entry
            matrix[j, i] = -entry
    return StructureMatrixPoint(n=n, point=z, matrix=matrix)


def pfaffian_recursive(n: int, point: PointLike) -> float:
    """
    Pfaffian of the chart structure matrix by the border recursion.

    Returns:
        2^n prod_{m<=n} (1 + sum_{l<=m} |z_l|^2), strictly positive
    """
    z = _as_point(n, point)
    pfaffian = 1.0
    running = 1.0
    for zm in z:
        running += abs(zm) ** 2
        pfaffian *= 2.0 * running
    return pfaffian


def pfaffian_oracle_error(n: int, point: PointLike) -> float:
    """Relative error |det(S) - Pf(S)^2| / |det(S)| with Pf from the recursion."""
    det = structure_matrix(n, point).determinant()
    pf = pfaffian_recursive(n, point)
    return abs(det - pf**2) / abs(det)


def random_chart_point(n: int, rng: np.random.Generator, scale: float = 1.0) -> List[complex]:
    """n complex coordinates with independent normal real and imaginary parts."""
    parts = rng.normal(scale=scale, size=(n, 2))
    return [complex(re, im) for re, im in parts]
