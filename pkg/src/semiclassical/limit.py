"""
Semiclassical limit {f, g} = lim_{q -> 1} [f, g] / (1 - q).

The commutator is computed exactly in normal form; each coefficient is divided
by (1 - q) and evaluated at q = 1, and each normal word is sent to the
commutative monomial with the same letter counts. Both the quantum quotient and
the classical ring eliminate the top pair a_n* a_n, so the dequantized result is
already reduced.
"""

import logging
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Optional

from src.exceptions import PresetMismatchError
from src.models.certificates import ResidualEntry, ResidualTable
from src.ncalg import AlgebraPreset, NCPoly, PresetKind, Word, commutator, get_preset
from src.poisson import (
    ClassicalPoly,
    PoissonStructure,
    bracket,
    even_sphere_coinduced,
    podles_standard,
    product_podles,
)
from src.scalars import laurent_div_one_minus_q, laurent_eval

logger = logging.getLogger(__name__)


def classical_structure_for(A: AlgebraPreset) -> PoissonStructure:
    """
    The Poisson structure a quantum preset dequantizes to.

    Raises:
        PresetMismatchError: For the odd plane, which has no classical counterpart here
    """
    if A.kind is PresetKind.EVEN_SPHERE:
        return even_sphere_coinduced(A.n)
    if A.kind is PresetKind.PODLES_SPHERE:
        return podles_standard()
    if A.kind is PresetKind.PODLES_PRODUCT_POWER:
        return product_podles(A.n)
    raise PresetMismatchError(f"No classical limit structure registered for {A.label}")


class DequantizationMap:
    """
    Word -> monomial correspondence between a quantum preset and its classical ring.

    Generator ranks and classical variable positions coincide (t, a1*, a1, ... and
    tau1, alpha1*, alpha1, ...), so a normal word maps to the monomial counting its letters.
    """

    def __init__(self, preset: AlgebraPreset, structure: Optional[PoissonStructure] = None):
        self.preset = preset
        self.structure = structure or classical_structure_for(preset)
        if self.structure.ring.size != preset.size:
            raise PresetMismatchError(
                f"{preset.label} and {self.structure.label} have different generator counts"
            )
        for name, variable in zip(preset.names, self.structure.ring.variables):
            if name != variable:
                raise PresetMismatchError(
                    f"Generator '{name}' of {preset.label} does not match variable '{variable}'"
                )

    def monomial(self, word: Word) -> tuple:
        exponents = [0] * self.preset.size
        for rank in word:
            exponents[rank] += 2
        return tuple(exponents)

    def __call__(self, coefficients: Dict[Word, Fraction]) -> ClassicalPoly:
        terms: Dict[tuple, Fraction] = {}
        for word, coeff in coefficients.items():
            key = self.monomial(word)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return ClassicalPoly(self.structure.ring, terms)


def semiclassical_bracket(f: NCPoly, g: NCPoly, A: AlgebraPreset) -> ClassicalPoly:
    """
    Exact semiclassical bracket of two quantum polynomials.

    Args:
        f, g: Polynomials over A
        A: EvenSphere, PodlesSphere or PodlesProductPower preset

    Returns:
        Classical polynomial over A's limit structure

    Raises:
        NotDivisibleError: If a commutator coefficient does not vanish at q = 1
        PresetMismatchError: If f, g are not over A or A has no limit structure

    Example:
        >>> A = even_sphere(2)
        >>> str(semiclassical_bracket(NCPoly.generator(A, "a1"), NCPoly.generator(A, "a2"), A))
        'a1 * a2'
    """
    dequantize = DequantizationMap(A)
    limits: Dict[Word, Fraction] = {}
    for word, coeff in commutator(f, g, A).items():
        limits[word] = laurent_eval(laurent_div_one_minus_q(coeff), Fraction(1))
    return dequantize(limits)


def verify_semiclassical(n: int, kind: PresetKind = PresetKind.EVEN_SPHERE) -> ResidualTable:
    """
    Compare semiclassical brackets with the classical structure on every generator pair.

    Args:
        n: Dimension parameter
        kind: EvenSphere (default), PodlesSphere or PodlesProductPower

    Returns:
        ResidualTable of semiclassical_bracket(u, v) - bracket(u, v) per unordered pair
    """
    A = get_preset(kind, n)
    P = classical_structure_for(A)
    table = ResidualTable(check=f"semiclassical:{A.label}")
    names: List[str] = list(A.names)
    for i, j in combinations_with_replacement(range(A.size), 2):
        quantum = semiclassical_bracket(NCPoly.generator(A, i), NCPoly.generator(A, j), A)
        classical = bracket(P.variable(names[i]), P.variable(names[j]), P)
        residual = P.reduce(quantum - classical)
        table.entries.append(
            ResidualEntry(label=f"({names[i]}, {names[j]})", residual=str(residual), terms=len(residual))
        )
    logger.info(f"Semiclassical check {A.label}: {len(table.nonzero())} nonzero residuals")
    return table
