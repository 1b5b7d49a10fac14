"""
Truncated n-fold Fock space and sparse operators on it.

Basis vectors are multi-indices (k_1, ..., k_n) with 0 <= k_i < N, enumerated
row-major with k_1 most significant. This is the ordering produced by
scipy.sparse.kron(A_1, kron(A_2, ...)), so operators assembled by Kronecker
products act on the same enumeration.
"""

import logging
import math
from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

import numpy as np
import scipy.sparse as sps
from pydantic import BaseModel, ConfigDict, Field

from src.exceptions import PresetMismatchError

logger = logging.getLogger(__name__)

MultiIndex = Tuple[int, ...]


class TruncatedFock(BaseModel):
    """
    The space spanned by |k_1, ..., k_n> with every k_i < N.

    Attributes:
        n: Number of tensor factors
        N: Levels kept per factor
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Tensor factors")
    N: int = Field(..., ge=2, description="Levels per factor")

    @property
    def dim(self) -> int:
        return self.N**self.n

    def flat_index(self, k: Sequence[int]) -> int:
        """
        Position of a multi-index in the row-major enumeration.

        Raises:
            ValueError: If the multi-index has the wrong length or leaves the truncation
        """
        if len(k) != self.n:
            raise ValueError(f"Expected a multi-index of length {self.n}, got {tuple(k)}")
        index = 0
        for level in k:
            if not 0 <= level < self.N:
                raise ValueError(f"Level {level} outside 0..{self.N - 1}")
            index = index * self.N + level
        return index

    def multi_index(self, flat: int) -> MultiIndex:
        digits: List[int] = []
        for _ in range(self.n):
            flat, level = divmod(flat, self.N)
            digits.append(level)
        return tuple(reversed(digits))

    def basis(self) -> Iterator[MultiIndex]:
        """All multi-indices in enumeration order."""
        return product(range(self.N), repeat=self.n)

    def interior(self, margin: int) -> List[int]:
        """Flat indices of basis vectors with every k_i < N - margin."""
        limit = self.N - margin
        if limit < 1:
            raise ValueError(f"Margin {margin} leaves no interior vectors for N = {self.N}")
        return [self.flat_index(k) for k in product(range(limit), repeat=self.n)]

    def basis_vector(self, k: Sequence[int]) -> np.ndarray:
        vector = np.zeros(self.dim)
        vector[self.flat_index(k)] = 1.0
        return vector


class SparseOperator:
    """
    Real operator on a TruncatedFock space, stored as a CSR matrix without explicit zeros.

    Attributes:
        space: Underlying truncated space
        matrix: scipy.sparse CSR matrix of shape (dim, dim)
    """

    __slots__ = ("space", "matrix")

    def __init__(self, space: TruncatedFock, matrix: sps.spmatrix):
        csr = sps.csr_matrix(matrix, dtype=float, copy=True)
        if csr.shape != (space.dim, space.dim):
            raise ValueError(f"Matrix shape {csr.shape} does not match dimension {space.dim}")
        csr.eliminate_zeros()
        self.space = space
        self.matrix = csr

    @classmethod
    def identity(cls, space: TruncatedFock) -> "SparseOperator":
        return cls(space, sps.identity(space.dim, format="csr"))

    @classmethod
    def zero(cls, space: TruncatedFock) -> "SparseOperator":
        return cls(space, sps.csr_matrix((space.dim, space.dim)))

    # ---- algebra ----

    def _check(self, other: "SparseOperator") -> None:
        if other.space != self.space:
            raise PresetMismatchError(f"Operators on different spaces: {self.space} and {other.space}")

    def __add__(self, other: "SparseOperator") -> "SparseOperator":
        self._check(other)
        return SparseOperator(self.space, self.matrix + other.matrix)

    def __sub__(self, other: "SparseOperator") -> "SparseOperator":
        self._check(other)
        return SparseOperator(self.space, self.matrix - other.matrix)

    def __neg__(self) -> "SparseOperator":
        return SparseOperator(self.space, -self.matrix)

    def __mul__(self, scalar: float) -> "SparseOperator":
        return SparseOperator(self.space, self.matrix * float(scalar))

    __rmul__ = __mul__

    def __matmul__(self, other: "SparseOperator") -> "SparseOperator":
        self._check(other)
        return SparseOperator(self.space, self.matrix @ other.matrix)

    def adjoint(self) -> "SparseOperator":
        """Conjugate transpose (the matrices are real)."""
        return SparseOperator(self.space, self.matrix.transpose())

    def apply(self, vector: np.ndarray) -> np.ndarray:
        return self.matrix @ vector

    # ---- inspection ----

    @property
    def nnz(self) -> int:
        return self.matrix.nnz

    def diagonal(self) -> np.ndarray:
        return self.matrix.diagonal()

    def trace(self) -> float:
        """Correctly rounded sum of the diagonal entries."""
        return math.fsum(self.diagonal())

    def entries(self) -> Dict[Tuple[MultiIndex, MultiIndex], float]:
        """Map (row multi-index, column multi-index) -> value over stored entries."""
        coo = self.matrix.tocoo()
        return {
            (self.space.multi_index(int(r)), self.space.multi_index(int(c))): float(v)
            for r, c, v in zip(coo.row, coo.col, coo.data)
        }

    def triplets(self) -> List[dict]:
        """JSON-ready list of {row, col, value} with flat indices, sorted by (row, col)."""
        coo = self.matrix.tocoo()
        rows = sorted(zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist()))
        return [{"row": r, "col": c, "value": v} for r, c, v in rows]

    def max_abs(self) -> float:
        return float(np.abs(self.matrix.data).max(initial=0.0))

    def max_column_norm(self, columns: Sequence[int]) -> float:
        """Largest Euclidean norm among the given columns."""
        if not len(columns):
            return 0.0
        block = self.matrix.tocsc()[:, list(columns)]
        squares = np.asarray(block.multiply(block).sum(axis=0)).ravel()
        return float(np.sqrt(squares.max(initial=0.0)))

    def to_dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def __repr__(self) -> str:
        return f"SparseOperator(n={self.space.n}, N={self.space.N}, nnz={self.nnz})"
