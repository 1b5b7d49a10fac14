"""
The recursive idempotents over the odd quantum plane and their projection to the sphere.

    e_0     = 1 - y
    e_(k+1) = [[e_k,      C_k x_(k+1)*],
               [C_k x_(k+1), 1 - phi(e_k)]]

with C_k the diagonal scalers and phi the scaling automorphism. e_k satisfies

    e_k^2 - e_k = Omega_k q^-2 C_k^2,   Omega_k = q^2 sum_{i<=k} x_i* x_i - y + y^2,

and Omega_n generates the ideal cutting the even sphere out of the odd plane, so
G_n = p(e_n) is an idempotent over the even sphere.
"""

import logging
from functools import lru_cache

from src.exceptions import IndexViolationError
from src.ktheory.matrices import DiagonalScaler, NCMatrix, ScalingAutomorphism
from src.ncalg import NCPoly, even_sphere, odd_plane
from src.scalars import Q

logger = logging.getLogger(__name__)


def _require_level(n: int, k: int) -> None:
    if n < 1:
        raise IndexViolationError(f"n must be at least 1, got {n}")
    if not 0 <= k <= n:
        raise IndexViolationError(f"k must satisfy 0 <= k <= n = {n}, got {k}")


@lru_cache(maxsize=None)
def build_e(n: int, k: int) -> NCMatrix:
    """
    The 2^k x 2^k idempotent e_k over OddPlane(n).

    Args:
        n: Number of x-generators of the plane
        k: Recursion level, 0 <= k <= n

    Returns:
        NCMatrix with normalized entries

    Raises:
        IndexViolationError: If k is outside 0..n

    Example:
        >>> build_e(1, 1).to_text()
        [['1 - y', 'q * x1*'], ['q * x1', 'q^2 * y']]
    """
    _require_level(n, k)
    A = odd_plane(n)
    if k == 0:
        return NCMatrix(A, [[1 - NCPoly.generator(A, "y")]])

    previous = build_e(n, k - 1)
    scaler = DiagonalScaler.at_level(k - 1)
    phi = ScalingAutomorphism(A)
    identity = NCMatrix.identity(A, previous.size)
    result = NCMatrix.block(
        previous,
        scaler.times(NCPoly.generator(A, f"x{k}*")),
        scaler.times(NCPoly.generator(A, f"x{k}")),
        identity - phi.apply(previous),
    )
    logger.debug(f"Built e_{k} over {A.label}")
    return result


@lru_cache(maxsize=None)
def build_G(n: int) -> NCMatrix:
    """
    The idempotent G_n = p(e_n) over EvenSphere(n).

    The quotient map p re-normalizes every entry with the modulus rule active.

    Example:
        >>> build_G(1).to_text()
        [['1 - t', 'q * a1*'], ['q * a1', 'q^2 * t']]
    """
    if n < 1:
        raise IndexViolationError(f"n must be at least 1, got {n}")
    return build_e(n, n).rename(even_sphere(n))


def matrix_trace(M: NCMatrix) -> NCPoly:
    """Sum of the diagonal entries, in normal form."""
    return M.trace()


def omega(n: int, k: int) -> NCPoly:
    """Omega_k = q^2 sum_{i<=k} x_i* x_i - y + y^2 over OddPlane(n)."""
    _require_level(n, k)
    A = odd_plane(n)
    y = NCPoly.generator(A, "y")
    total = y * y - y
    for i in range(1, k + 1):
        total = total + NCPoly.generator(A, f"x{i}*") * NCPoly.generator(A, f"x{i}") * Q**2
    return total


def check_lemma_M(n: int, k: int, l: int) -> NCMatrix:
    """
    Residual e_k C_k x_l* - C_k x_l* phi(e_k) for k < l <= n.

    Every entry vanishes, which is the commutation property the recursion relies on.

    Raises:
        IndexViolationError: Unless k < l <= n
    """
    _require_level(n, k)
    if not k < l <= n:
        raise IndexViolationError(f"Need k < l <= n, got k={k}, l={l}, n={n}")
    A = odd_plane(n)
    e = build_e(n, k)
    scaled = DiagonalScaler.at_level(k).times(NCPoly.generator(A, f"x{l}*"))
    phi = ScalingAutomorphism(A)
    return e @ scaled - scaled @ phi.apply(e)


def defect_rhs(n: int, k: int) -> NCMatrix:
    """The diagonal matrix Omega_k q^-2 C_k^2."""
    _require_level(n, k)
    A = odd_plane(n)
    base = omega(n, k)
    return NCMatrix.diagonal(A, [base * (c * Q**-2) for c in DiagonalScaler.at_level(k).squared()])


def check_defect(n: int, k: int) -> NCMatrix:
    """
    Residual (e_k^2 - e_k) - Omega_k q^-2 C_k^2 over OddPlane(n); the zero matrix.

    Raises:
        IndexViolationError: If k is outside 0..n
    """
    e = build_e(n, k)
    return (e @ e - e) - defect_rhs(n, k)


def check_quotient_defect(n: int) -> NCMatrix:
    """
    The defect Omega_n q^-2 C_n^2 projected to EvenSphere(n).

    Omega_n maps to the modulus relation, so the projection is the zero matrix.
    This re-derives idempotency of G_n without squaring it.
    """
    return defect_rhs(n, n).rename(even_sphere(n))


def check_idempotency(n: int) -> NCMatrix:
    """G_n^2 - G_n over EvenSphere(n); the zero matrix."""
    G = build_G(n)
    return G @ G - G


def expected_trace(n: int, k: int) -> NCPoly:
    """
    Closed form 2^(k-1) - (1 - q^2)^k y of Tr(e_k), for 1 <= k <= n.

    Raises:
        IndexViolationError: If k is outside 1..n
    """
    _require_level(n, k)
    if k == 0:
        raise IndexViolationError("The closed trace form holds for k >= 1")
    A = odd_plane(n)
    return 2 ** (k - 1) - NCPoly.generator(A, "y") * (1 - Q**2) ** k
