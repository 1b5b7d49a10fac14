"""
Commutative polynomial rings for the classical side.

ClassicalPoly stores monomials as exponent vectors counted in half-steps, so a
stored exponent h means x^(h/2). Only variables flagged as half-step (the tau
coordinates of the product sphere) may carry odd h in polynomials built by the
package; partial derivatives may create negative half-step exponents
transiently, and they cancel in every bracket that is reduced on a sphere.
"""

import cmath
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union

from src.exceptions import PresetMismatchError

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Coefficient = Union[int, Fraction]


@dataclass(frozen=True)
class ClassicalRing:
    """
    Variable set of a commutative coordinate ring.

    Attributes:
        label: Ring label, e.g. "ProductPodles(2)"
        variables: Variable names in ring order
        half_step: Per variable, whether half-integer exponents are allowed
        conjugates: Per variable, index of its complex conjugate variable
    """

    label: str
    variables: Tuple[str, ...]
    half_step: Tuple[bool, ...]
    conjugates: Tuple[int, ...]
    _index: Dict[str, int] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if not (len(self.variables) == len(self.half_step) == len(self.conjugates)):
            raise ValueError("variables, half_step and conjugates must have equal lengths")
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.variables)})

    @property
    def size(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        """
        Index of a variable by name.

        Raises:
            PresetMismatchError: If the variable is not in this ring
        """
        try:
            return self._index[name.strip()]
        except KeyError:
            raise PresetMismatchError(f"Unknown variable '{name}' for {self.label}") from None

    def has_variable(self, name: str) -> bool:
        return name in self._index


class ClassicalPoly:
    """Immutable polynomial with rational coefficients over a ClassicalRing."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: ClassicalRing, terms: Optional[Mapping[Monomial, Coefficient]] = None):
        cleaned: Dict[Monomial, Fraction] = {}
        for monomial, coeff in (terms or {}).items():
            if len(monomial) != ring.size:
                raise ValueError(f"Monomial {monomial} has wrong length for {ring.label}")
            value = Fraction(coeff)
            if value:
                key = tuple(monomial)
                cleaned[key] = cleaned.get(key, Fraction(0)) + value
                if not cleaned[key]:
                    del cleaned[key]
        self.ring = ring
        self._terms = cleaned
        self._hash: Optional[int] = None

    @classmethod
    def _trusted(cls, ring: ClassicalRing, terms: Dict[Monomial, Fraction]) -> "ClassicalPoly":
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        obj._hash = None
        return obj

    # ---- constructors ----

    @classmethod
    def zero(cls, ring: ClassicalRing) -> "ClassicalPoly":
        return cls._trusted(ring, {})

    @classmethod
    def constant(cls, ring: ClassicalRing, value: Coefficient) -> "ClassicalPoly":
        return cls(ring, {(0,) * ring.size: value})

    @classmethod
    def variable(cls, ring: ClassicalRing, name: str, half_steps: int = 2) -> "ClassicalPoly":
        """The variable `name` raised to half_steps / 2."""
        exponents = [0] * ring.size
        exponents[ring.index(name)] = half_steps
        return cls._trusted(ring, {tuple(exponents): Fraction(1)})

    # ---- inspection ----

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items(), key=lambda item: (sum(item[0]), item[0])))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    # ---- arithmetic ----

    def _check(self, other: "ClassicalPoly") -> None:
        if other.ring != self.ring:
            raise PresetMismatchError(
                f"Operands over different rings: {self.ring.label} and {other.ring.label}"
            )

    def _coerce(self, other: object) -> Optional["ClassicalPoly"]:
        if isinstance(other, ClassicalPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ClassicalPoly.constant(self.ring, other)
        return None

    def __add__(self, other: object) -> "ClassicalPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        result = dict(self._terms)
        for monomial, coeff in rhs._terms.items():
            total = result.get(monomial, 0) + coeff
            if total:
                result[monomial] = total
            else:
                result.pop(monomial, None)
        return ClassicalPoly._trusted(self.ring, result)

    __radd__ = __add__

    def __neg__(self) -> "ClassicalPoly":
        return ClassicalPoly._trusted(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "ClassicalPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "ClassicalPoly":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: object) -> "ClassicalPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        result: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in rhs._terms.items():
                monomial = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                result[monomial] = result.get(monomial, 0) + c1 * c2
        return ClassicalPoly._trusted(self.ring, {m: c for m, c in result.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ClassicalPoly":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = ClassicalPoly.constant(self.ring, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def derivative(self, index: int) -> "ClassicalPoly":
        """Partial derivative with respect to the variable at `index`."""
        result: Dict[Monomial, Fraction] = {}
        for monomial, coeff in self._terms.items():
            h = monomial[index]
            if h == 0:
                continue
            lowered = monomial[:index] + (h - 2,) + monomial[index + 1 :]
            result[lowered] = result.get(lowered, 0) + coeff * Fraction(h, 2)
        return ClassicalPoly._trusted(self.ring, {m: c for m, c in result.items() if c})

    def conjugate(self) -> "ClassicalPoly":
        """Complex conjugate: swap every variable with its conjugate (coefficients are real)."""
        conj = self.ring.conjugates
        result = {}
        for monomial, coeff in self._terms.items():
            swapped = [0] * self.ring.size
            for i, h in enumerate(monomial):
                swapped[conj[i]] += h
            result[tuple(swapped)] = coeff
        return ClassicalPoly._trusted(self.ring, result)

    def substitute_monomials(
        self, target: ClassicalRing, images: Sequence[Monomial]
    ) -> "ClassicalPoly":
        """
        Ring homomorphism sending each variable to a monomial of `target`.

        Args:
            target: Codomain ring
            images: For each variable of this ring, its image as a half-step exponent vector

        Returns:
            Image polynomial over `target`
        """
        result: Dict[Monomial, Fraction] = {}
        for monomial, coeff in self._terms.items():
            image = [0] * target.size
            for h, img in zip(monomial, images):
                if h == 0:
                    continue
                if h % 2:
                    raise ValueError("Monomial substitution needs integer exponents in the source")
                for k, e in enumerate(img):
                    image[k] += (h // 2) * e
            key = tuple(image)
            result[key] = result.get(key, 0) + coeff
        return ClassicalPoly._trusted(target, {m: c for m, c in result.items() if c})

    def evaluate(self, values: Union[Sequence[complex], Mapping[str, complex]]) -> complex:
        """
        Evaluate at a point given by one value per variable (by position or by name).

        Half-step exponents use the principal square root.
        """
        if isinstance(values, Mapping):
            point = [complex(values[name]) for name in self.ring.variables]
        else:
            point = [complex(v) for v in values]
            if len(point) != self.ring.size:
                raise ValueError(f"Expected {self.ring.size} values, got {len(point)}")
        total = 0j
        for monomial, coeff in self._terms.items():
            term = complex(coeff)
            for value, h in zip(point, monomial):
                if h == 0:
                    continue
                if h % 2:
                    term *= cmath.sqrt(value) ** h
                else:
                    term *= value ** (h // 2)
            total += term
        return total

    # ---- comparison ----

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ClassicalPoly):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == ClassicalPoly.constant(self.ring, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.label, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ---- text ----

    def _monomial_text(self, monomial: Monomial) -> str:
        parts = []
        for name, h in zip(self.ring.variables, monomial):
            if h == 0:
                continue
            if h == 2:
                parts.append(name)
            elif h % 2 == 0:
                parts.append(f"{name}^{h // 2}")
            else:
                parts.append(f"{name}^({Fraction(h, 2)})")
        return " * ".join(parts)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for index, (monomial, coeff) in enumerate(self.items()):
            negative = coeff < 0
            magnitude = -coeff if negative else coeff
            body = self._monomial_text(monomial)
            if not body:
                body = str(magnitude)
            elif magnitude != 1:
                body = f"{magnitude} * {body}"
            if index == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"ClassicalPoly({self.ring.label}: {self})"
