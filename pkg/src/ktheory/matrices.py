"""
Matrices over a preset algebra, the diagonal scalers C_k and the scaling automorphism.

Usage:
    from src.ktheory.matrices import NCMatrix, DiagonalScaler

    A = odd_plane(1)
    C = DiagonalScaler.at_level(1)      # diag(q, q^2)
    M = NCMatrix.identity(A, 2)
    print(M.to_text())                  # [['1', '0'], ['0', '1']]
"""

import logging
from typing import Callable, List, Sequence, Tuple

from src.exceptions import PresetMismatchError
from src.ncalg import AlgebraPreset, NCPoly, rename_preset
from src.scalars import Q, LaurentQ

logger = logging.getLogger(__name__)


class NCMatrix:
    """
    Immutable square matrix of NCPoly entries over one preset.

    Attributes:
        preset: Algebra every entry lives in
    """

    __slots__ = ("preset", "_rows")

    def __init__(self, preset: AlgebraPreset, rows: Sequence[Sequence[NCPoly]]):
        size = len(rows)
        if any(len(row) != size for row in rows):
            raise ValueError("NCMatrix must be square")
        for row in rows:
            for entry in row:
                if entry.preset is not preset:
                    raise PresetMismatchError(
                        f"Entry over {entry.preset.label} in a matrix over {preset.label}"
                    )
        self.preset = preset
        self._rows: Tuple[Tuple[NCPoly, ...], ...] = tuple(tuple(row) for row in rows)

    # ---- constructors ----

    @classmethod
    def zero(cls, preset: AlgebraPreset, size: int) -> "NCMatrix":
        zero = NCPoly.zero(preset)
        return cls(preset, [[zero] * size for _ in range(size)])

    @classmethod
    def identity(cls, preset: AlgebraPreset, size: int) -> "NCMatrix":
        return cls.diagonal(preset, [NCPoly.one(preset)] * size)

    @classmethod
    def diagonal(cls, preset: AlgebraPreset, entries: Sequence[NCPoly]) -> "NCMatrix":
        zero = NCPoly.zero(preset)
        size = len(entries)
        return cls(
            preset,
            [[entries[i] if i == j else zero for j in range(size)] for i in range(size)],
        )

    @classmethod
    def block(
        cls,
        top_left: "NCMatrix",
        top_right: "NCMatrix",
        bottom_left: "NCMatrix",
        bottom_right: "NCMatrix",
    ) -> "NCMatrix":
        """Assemble [[A, B], [C, D]] from four equal-size blocks."""
        preset = top_left.preset
        blocks = (top_left, top_right, bottom_left, bottom_right)
        if any(b.preset is not preset or b.size != top_left.size for b in blocks):
            raise PresetMismatchError("Blocks must share one preset and one size")
        upper = [a + b for a, b in zip(top_left._rows, top_right._rows)]
        lower = [c + d for c, d in zip(bottom_left._rows, bottom_right._rows)]
        return cls(preset, upper + lower)

    # ---- inspection ----

    @property
    def size(self) -> int:
        return len(self._rows)

    def entry(self, i: int, j: int) -> NCPoly:
        return self._rows[i][j]

    @property
    def rows(self) -> List[List[NCPoly]]:
        return [list(row) for row in self._rows]

    def is_zero(self) -> bool:
        return all(entry.is_zero() for row in self._rows for entry in row)

    def nonzero_entries(self) -> List[Tuple[int, int]]:
        return [
            (i, j)
            for i, row in enumerate(self._rows)
            for j, entry in enumerate(row)
            if not entry.is_zero()
        ]

    def trace(self) -> NCPoly:
        total = NCPoly.zero(self.preset)
        for i in range(self.size):
            total = total + self._rows[i][i]
        return total

    # ---- arithmetic ----

    def _check(self, other: "NCMatrix") -> None:
        if other.preset is not self.preset or other.size != self.size:
            raise PresetMismatchError(
                f"Incompatible matrices: {self.size}x{self.size} over {self.preset.label} "
                f"and {other.size}x{other.size} over {other.preset.label}"
            )

    def map(self, fn: Callable[[NCPoly], NCPoly]) -> "NCMatrix":
        return NCMatrix(self.preset, [[fn(entry) for entry in row] for row in self._rows])

    def __add__(self, other: "NCMatrix") -> "NCMatrix":
        self._check(other)
        return NCMatrix(
            self.preset,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)],
        )

    def __sub__(self, other: "NCMatrix") -> "NCMatrix":
        self._check(other)
        return NCMatrix(
            self.preset,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)],
        )

    def __neg__(self) -> "NCMatrix":
        return self.map(lambda entry: -entry)

    def __matmul__(self, other: "NCMatrix") -> "NCMatrix":
        self._check(other)
        size = self.size
        rows = []
        for i in range(size):
            row = []
            for j in range(size):
                total = NCPoly.zero(self.preset)
                for k in range(size):
                    left = self._rows[i][k]
                    right = other._rows[k][j]
                    if left and right:
                        total = total + left * right
                row.append(total)
            rows.append(row)
        return NCMatrix(self.preset, rows)

    def scale(self, value) -> "NCMatrix":
        return self.map(lambda entry: entry * value)

    def rename(self, target: AlgebraPreset) -> "NCMatrix":
        """Re-normalize every entry over another preset of the same shape."""
        return NCMatrix(target, [[rename_preset(entry, target) for entry in row] for row in self._rows])

    # ---- comparison / text ----

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCMatrix):
            return NotImplemented
        return self.preset is other.preset and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.preset.key, self._rows))

    def to_text(self) -> List[List[str]]:
        """Entries in canonical NCPoly text."""
        return [[str(entry) for entry in row] for row in self._rows]

    def __repr__(self) -> str:
        return f"NCMatrix({self.size}x{self.size} over {self.preset.label})"


class DiagonalScaler:
    """
    The diagonal matrix C_k with Laurent entries.

    C_0 = (q) and C_(k+1) = diag(C_k, q C_k), so C_k has 2^k entries q^(1 + popcount(j)).
    """

    __slots__ = ("level", "entries")

    def __init__(self, level: int, entries: Sequence[LaurentQ]):
        if len(entries) != 2**level:
            raise ValueError(f"C_{level} has {2**level} entries, got {len(entries)}")
        self.level = level
        self.entries: Tuple[LaurentQ, ...] = tuple(entries)

    @classmethod
    def base(cls) -> "DiagonalScaler":
        return cls(0, [Q])

    @classmethod
    def at_level(cls, level: int) -> "DiagonalScaler":
        if level < 0:
            raise ValueError(f"Level must be nonnegative, got {level}")
        scaler = cls.base()
        for _ in range(level):
            scaler = scaler.step()
        return scaler

    def step(self) -> "DiagonalScaler":
        return DiagonalScaler(self.level + 1, self.entries + tuple(Q * c for c in self.entries))

    @property
    def size(self) -> int:
        return len(self.entries)

    def squared(self) -> Tuple[LaurentQ, ...]:
        return tuple(c * c for c in self.entries)

    def times(self, f: NCPoly) -> NCMatrix:
        """The diagonal matrix diag(c_j f)."""
        return NCMatrix.diagonal(f.preset, [f * c for c in self.entries])


class ScalingAutomorphism:
    """
    The algebra map multiplying each generator by q^2.

    On a word it acts by q^(2 |w|). It is well defined exactly when every
    relation is homogeneous in word length, which holds for the odd plane but
    fails for the even sphere (the modulus relation mixes t and t^2).
    """

    def __init__(self, preset: AlgebraPreset, weight: LaurentQ = Q**2):
        self.preset = preset
        self.weight = weight

    def is_well_defined(self) -> bool:
        """True if every rewrite rule preserves word length."""
        return all(
            len(word) == 2
            for rhs in self.preset.rules.values()
            for word, _ in rhs
        )

    def __call__(self, f: NCPoly) -> NCPoly:
        if f.preset is not self.preset:
            raise PresetMismatchError(f"Polynomial over {f.preset.label} used with {self.preset.label}")
        return NCPoly(self.preset, {word: coeff * self.weight ** len(word) for word, coeff in f.items()})

    def apply(self, M: NCMatrix) -> NCMatrix:
        return M.map(self)

    def homomorphism_residual(self, f: NCPoly, g: NCPoly) -> NCPoly:
        """phi(fg) - phi(f) phi(g), which is zero whenever the map is well defined."""
        return self(f * g) - self(f) * self(g)
