"""
Noncommutative polynomials in normal form.

NCPoly is a finite sum of LaurentQ coefficients times normal words over one
algebra preset. Every constructor normalizes, so equality of two NCPoly is
equality of their term maps.

Usage:
    from src.ncalg import NCPoly, even_sphere

    A = even_sphere(1)
    a, a_star = NCPoly.generator(A, "a1"), NCPoly.generator(A, "a1*")
    print(a * a_star)   # t - q^2 * t^2
"""

import logging
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union

from src.exceptions import PresetMismatchError
from src.ncalg.generators import PresetKind
from src.ncalg.presets import AlgebraPreset, GeneratorLike, Word
from src.ncalg.rewriting import reduce_terms
from src.scalars import ONE, Q, ZERO, LaurentQ

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, LaurentQ]
RawExpression = Mapping[Sequence[GeneratorLike], Scalar]


class NCPoly:
    """
    Immutable element of a preset algebra, stored in normal form.

    Attributes:
        preset: Owning algebra preset
    """

    __slots__ = ("preset", "_terms", "_hash")

    def __init__(
        self,
        preset: AlgebraPreset,
        terms: Optional[RawExpression] = None,
        strategy: str = "leftmost",
    ):
        raw: Dict[Word, LaurentQ] = {}
        for generators, coeff in (terms or {}).items():
            word = preset.word_from(generators)
            raw[word] = raw.get(word, ZERO) + LaurentQ.coerce(coeff)
        self.preset = preset
        self._terms = reduce_terms(preset, raw, strategy)
        self._hash: Optional[int] = None

    @classmethod
    def _trusted(cls, preset: AlgebraPreset, terms: Dict[Word, LaurentQ]) -> "NCPoly":
        obj = cls.__new__(cls)
        obj.preset = preset
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def _from_words(
        cls, preset: AlgebraPreset, terms: Mapping[Word, LaurentQ], strategy: str = "leftmost"
    ) -> "NCPoly":
        return cls._trusted(preset, reduce_terms(preset, terms, strategy))

    # ---- constructors ----

    @classmethod
    def zero(cls, preset: AlgebraPreset) -> "NCPoly":
        return cls._trusted(preset, {})

    @classmethod
    def scalar(cls, preset: AlgebraPreset, value: Scalar) -> "NCPoly":
        coeff = LaurentQ.coerce(value)
        return cls._trusted(preset, {(): coeff} if coeff else {})

    @classmethod
    def one(cls, preset: AlgebraPreset) -> "NCPoly":
        return cls.scalar(preset, ONE)

    @classmethod
    def generator(cls, preset: AlgebraPreset, generator: GeneratorLike) -> "NCPoly":
        """
        Single generator as a polynomial.

        Raises:
            PresetMismatchError: If the generator is not in the preset
        """
        return cls._trusted(preset, {(preset.rank_of(generator),): ONE})

    @classmethod
    def monomial(
        cls, preset: AlgebraPreset, generators: Sequence[GeneratorLike], coeff: Scalar = 1
    ) -> "NCPoly":
        """coeff times the product of the given generators, normalized."""
        return cls(preset, {tuple(generators): coeff})

    # ---- inspection ----

    @property
    def terms(self) -> Dict[Word, LaurentQ]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Word, LaurentQ]]:
        """(word, coefficient) pairs in canonical word order."""
        return iter(sorted(self._terms.items(), key=lambda item: (len(item[0]), item[0])))

    def coefficient(self, word: Sequence[GeneratorLike]) -> LaurentQ:
        return self._terms.get(self.preset.word_from(word), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Length of the longest word (-1 for zero)."""
        return max((len(w) for w in self._terms), default=-1)

    def __len__(self) -> int:
        return len(self._terms)

    # ---- arithmetic ----

    def _check(self, other: "NCPoly") -> None:
        if other.preset is not self.preset:
            raise PresetMismatchError(
                f"Operands over different presets: {self.preset.label} and {other.preset.label}"
            )

    def _coerce(self, other: object) -> Optional["NCPoly"]:
        if isinstance(other, NCPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, LaurentQ)) and not isinstance(other, bool):
            return NCPoly.scalar(self.preset, other)
        return None

    def __add__(self, other: object) -> "NCPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        result = dict(self._terms)
        for word, coeff in rhs._terms.items():
            total = result.get(word, ZERO) + coeff
            if total:
                result[word] = total
            else:
                result.pop(word, None)
        return NCPoly._trusted(self.preset, result)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly._trusted(self.preset, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: object) -> "NCPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "NCPoly":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def scale(self, value: Scalar) -> "NCPoly":
        coeff = LaurentQ.coerce(value)
        if coeff.is_zero():
            return NCPoly.zero(self.preset)
        return NCPoly._trusted(self.preset, {w: c * coeff for w, c in self._terms.items()})

    def __mul__(self, other: object) -> "NCPoly":
        if isinstance(other, (int, Fraction, LaurentQ)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        self._check(other)
        raw: Dict[Word, LaurentQ] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                word = w1 + w2
                raw[word] = raw.get(word, ZERO) + c1 * c2
        return NCPoly._from_words(self.preset, raw)

    def __rmul__(self, other: object) -> "NCPoly":
        if isinstance(other, (int, Fraction, LaurentQ)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "NCPoly":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = NCPoly.one(self.preset)
        for _ in range(exponent):
            result = result * self
        return result

    def map_coefficients(self, fn) -> "NCPoly":
        """Apply fn: LaurentQ -> LaurentQ to every coefficient, dropping zeros."""
        result = {}
        for word, coeff in self._terms.items():
            mapped = fn(coeff)
            if mapped:
                result[word] = mapped
        return NCPoly._trusted(self.preset, result)

    # ---- comparison ----

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NCPoly):
            return self.preset is other.preset and self._terms == other._terms
        if isinstance(other, (int, Fraction, LaurentQ)) and not isinstance(other, bool):
            return self == NCPoly.scalar(self.preset, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.preset.key, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ---- text ----

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for index, (word, coeff) in enumerate(self.items()):
            negative = len(coeff.terms) == 1 and next(iter(coeff.terms.values())) < 0
            magnitude = -coeff if negative else coeff
            if len(magnitude.terms) > 1:
                scalar_text = f"({magnitude})"
            else:
                scalar_text = str(magnitude)
            if word:
                word_text = self.preset.word_text(word)
                body = word_text if magnitude == 1 else f"{scalar_text} * {word_text}"
            else:
                body = scalar_text
            if index == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"NCPoly({self.preset.label}: {self})"


# ============================================================================
# Module-level operations
# ============================================================================


def _require_preset(f: NCPoly, A: AlgebraPreset) -> None:
    if f.preset is not A:
        raise PresetMismatchError(f"Polynomial over {f.preset.label} used with {A.label}")


def normalize(
    p: Union[NCPoly, RawExpression], A: AlgebraPreset, strategy: str = "leftmost"
) -> NCPoly:
    """
    Normal form of a raw noncommutative expression.

    Args:
        p: NCPoly over A, or a map from generator sequences (ranks, names or
           GeneratorIds) to scalar coefficients
        A: Target preset
        strategy: Redex selection, "leftmost" or "rightmost"

    Returns:
        The unique normal form over A

    Raises:
        PresetMismatchError: On unknown generators or an NCPoly over another preset

    Example:
        >>> str(normalize({("a1", "t"): 1}, even_sphere(2)))
        'q^2 * t * a1'
    """
    if isinstance(p, NCPoly):
        _require_preset(p, A)
        return NCPoly._from_words(A, p._terms, strategy)
    return NCPoly(A, p, strategy)


def commutator(f: NCPoly, g: NCPoly, A: AlgebraPreset) -> NCPoly:
    """
    [f, g] = f g - g f in normal form.

    Raises:
        PresetMismatchError: If f or g is not over A
    """
    _require_preset(f, A)
    _require_preset(g, A)
    return f * g - g * f


def star(f: NCPoly, A: AlgebraPreset) -> NCPoly:
    """
    The *-involution: reverse every word and star each letter.

    Coefficients are real Laurent polynomials in q, so they are unchanged.
    """
    _require_preset(f, A)
    starred = {A.star_word(word): coeff for word, coeff in f._terms.items()}
    return NCPoly._from_words(A, starred)


def epsilon(f: NCPoly) -> LaurentQ:
    """The counit character: coefficient of the empty word."""
    return f._terms.get((), ZERO)


def rename_preset(f: NCPoly, target: AlgebraPreset) -> NCPoly:
    """
    Re-express f over another preset with the same generator shape and normalize there.

    This realizes the quotient map from the odd plane onto the even sphere.

    Raises:
        PresetMismatchError: If the presets have different generator shapes
    """
    if f.preset is target:
        return f
    if f.preset.size != target.size or [g.family for g in f.preset.generators] != [
        g.family for g in target.generators
    ]:
        raise PresetMismatchError(f"Cannot rename {f.preset.label} into {target.label}")
    return NCPoly._from_words(target, f._terms)


def modulus_element(A: AlgebraPreset) -> NCPoly:
    """
    q^2 sum_i a_i* a_i - t + t^2 over a sphere-type preset.

    It vanishes in the even sphere and generates the ideal in the odd plane.

    Raises:
        PresetMismatchError: For the product preset with n > 1
    """
    if A.kind is PresetKind.PODLES_PRODUCT_POWER and A.n > 1:
        raise PresetMismatchError(f"No single modulus element for {A.label}")
    t = A.t_ranks()[0]
    raw: Dict[Word, LaurentQ] = {(t,): -ONE, (t, t): ONE}
    for a_star, a in zip(A.a_ranks(starred=True), A.a_ranks()):
        raw[(a_star, a)] = Q**2
    return NCPoly._from_words(A, raw)
