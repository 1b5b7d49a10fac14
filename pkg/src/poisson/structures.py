"""
Poisson structures: generator bracket tables with relation reduction.

A PoissonStructure fixes a ClassicalRing, the bracket of every pair of
variables, and reduction rules for the relations of the ambient variety. The
bracket of two polynomials is the Leibniz extension

    {f, g} = sum_{i, j} (df/dx_i) (dg/dx_j) {x_i, x_j}

followed by reduction. Tables are filled from the listed brackets through
antisymmetry and the conjugation rule {conj u, conj v} = -conj({u, v}), which
holds because the bracket is the semiclassical limit of a commutator in a
*-algebra with real q.

Usage:
    from src.poisson.structures import even_sphere_coinduced, bracket

    P = even_sphere_coinduced(2)
    a1, t = P.variable("a1"), P.variable("t")
    print(bracket(a1, t, P))   # -2 * t * a1
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from src.exceptions import PresetMismatchError
from src.poisson.classical import ClassicalPoly, ClassicalRing

logger = logging.getLogger(__name__)


class PoissonKind(str, Enum):
    """The four Poisson structures."""

    PODLES_STANDARD = "PodlesStandard"
    PRODUCT_PODLES = "ProductPodles"
    EVEN_SPHERE_COINDUCED = "EvenSphereCoinduced"
    CHART_PLANE = "ChartPlane"

    @classmethod
    def parse(cls, text: str) -> "PoissonKind":
        """
        Look up a structure kind by name, case-insensitively.

        Raises:
            ValueError: If the name is unknown
        """
        wanted = text.strip().lower()
        for kind in cls:
            if kind.value.lower() == wanted:
                return kind
        valid = ", ".join(kind.value for kind in cls)
        raise ValueError(f"Unknown Poisson structure '{text}'. Valid structures: {valid}")


@dataclass(frozen=True)
class ReductionRule:
    """Replace one factor x_first * x_second of a monomial by `replacement`."""

    first: int
    second: int
    replacement: ClassicalPoly


class PoissonStructure:
    """
    Bracket table plus relation reduction on a classical ring.

    Attributes:
        kind: Structure kind
        n: Dimension parameter
        ring: Coordinate ring
        reductions: Relation reduction rules (empty for the chart)
        relations: Generators of the relation ideal (each reduces to 0)
    """

    def __init__(
        self,
        kind: PoissonKind,
        n: int,
        ring: ClassicalRing,
        table: Dict[Tuple[int, int], ClassicalPoly],
        reductions: Sequence[ReductionRule] = (),
        relations: Sequence[ClassicalPoly] = (),
    ):
        self.kind = kind
        self.n = n
        self.ring = ring
        self._table = dict(table)
        self.reductions: Tuple[ReductionRule, ...] = tuple(reductions)
        self.relations: Tuple[ClassicalPoly, ...] = tuple(relations)
        self.label = f"{kind.value}({n})"

    def variable(self, name: str) -> ClassicalPoly:
        return ClassicalPoly.variable(self.ring, name)

    def generators(self) -> List[ClassicalPoly]:
        """Every coordinate variable as a polynomial, in ring order."""
        return [self.variable(name) for name in self.ring.variables]

    def generator_bracket(self, i: int, j: int) -> ClassicalPoly:
        """Table entry {x_i, x_j} (zero when not listed)."""
        return self._table.get((i, j), ClassicalPoly.zero(self.ring))

    def reduce(self, f: ClassicalPoly) -> ClassicalPoly:
        """
        Reduce f modulo the relations until no rule applies.

        Raises:
            PresetMismatchError: If f lives in another ring
        """
        if f.ring != self.ring:
            raise PresetMismatchError(f"Polynomial over {f.ring.label} used with {self.label}")
        if not self.reductions:
            return f
        current = f
        while True:
            pending = ClassicalPoly.zero(self.ring)
            changed = False
            for monomial, coeff in current._terms.items():
                rule = self._applicable(monomial)
                if rule is None:
                    pending = pending + ClassicalPoly._trusted(self.ring, {monomial: coeff})
                    continue
                changed = True
                rest = list(monomial)
                rest[rule.first] -= 2
                rest[rule.second] -= 2
                cofactor = ClassicalPoly._trusted(self.ring, {tuple(rest): coeff})
                pending = pending + cofactor * rule.replacement
            if not changed:
                return pending
            current = pending

    def _applicable(self, monomial: Tuple[int, ...]):
        for rule in self.reductions:
            if monomial[rule.first] >= 2 and monomial[rule.second] >= 2:
                return rule
        return None

    def __repr__(self) -> str:
        return f"PoissonStructure({self.label})"


def bracket(f: ClassicalPoly, g: ClassicalPoly, P: PoissonStructure) -> ClassicalPoly:
    """
    Poisson bracket {f, g} under P, reduced modulo P's relations.

    Raises:
        PresetMismatchError: If f or g is not in P's ring
    """
    for poly in (f, g):
        if poly.ring != P.ring:
            raise PresetMismatchError(f"Polynomial over {poly.ring.label} used with {P.label}")
    result = ClassicalPoly.zero(P.ring)
    f_partials = [(i, f.derivative(i)) for i in range(P.ring.size)]
    g_partials = [(j, g.derivative(j)) for j in range(P.ring.size)]
    for i, df in f_partials:
        if df.is_zero():
            continue
        for j, dg in g_partials:
            if dg.is_zero():
                continue
            entry = P.generator_bracket(i, j)
            if entry.is_zero():
                continue
            result = result + df * dg * entry
    return P.reduce(result)


# ============================================================================
# Table construction
# ============================================================================


class _TableBuilder:
    """Fills a bracket table from listed entries via antisymmetry and conjugation."""

    def __init__(self, ring: ClassicalRing):
        self.ring = ring
        self.table: Dict[Tuple[int, int], ClassicalPoly] = {}

    def _put(self, i: int, j: int, value: ClassicalPoly) -> None:
        existing = self.table.get((i, j))
        if existing is not None and existing != value:
            raise ValueError(
                f"Inconsistent bracket table for {self.ring.label} at "
                f"({self.ring.variables[i]}, {self.ring.variables[j]}): {existing} vs {value}"
            )
        self.table[(i, j)] = value

    def set(self, u: str, v: str, value: ClassicalPoly) -> None:
        i, j = self.ring.index(u), self.ring.index(v)
        ci, cj = self.ring.conjugates[i], self.ring.conjugates[j]
        self._put(i, j, value)
        self._put(j, i, -value)
        self._put(ci, cj, -value.conjugate())
        self._put(cj, ci, value.conjugate())


def _sphere_ring(n: int) -> ClassicalRing:
    variables = ["t"]
    conjugates = [0]
    for i in range(1, n + 1):
        variables += [f"a{i}*", f"a{i}"]
        conjugates += [2 * i, 2 * i - 1]
    return ClassicalRing(
        label=f"EvenSphereCoinduced({n})",
        variables=tuple(variables),
        half_step=(False,) * len(variables),
        conjugates=tuple(conjugates),
    )


def _product_ring(n: int, label: str) -> ClassicalRing:
    variables: List[str] = []
    conjugates: List[int] = []
    half_step: List[bool] = []
    for i in range(1, n + 1):
        base = 3 * (i - 1)
        variables += [f"tau{i}", f"alpha{i}*", f"alpha{i}"]
        conjugates += [base, base + 2, base + 1]
        half_step += [True, False, False]
    return ClassicalRing(
        label=label,
        variables=tuple(variables),
        half_step=tuple(half_step),
        conjugates=tuple(conjugates),
    )


def _chart_ring(n: int) -> ClassicalRing:
    variables: List[str] = []
    conjugates: List[int] = []
    for k in range(1, n + 1):
        variables += [f"z{k}", f"z{k}*"]
        conjugates += [2 * k - 1, 2 * k - 2]
    return ClassicalRing(
        label=f"ChartPlane({n})",
        variables=tuple(variables),
        half_step=(False,) * len(variables),
        conjugates=tuple(conjugates),
    )


def _require_positive(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def _build_product(n: int, kind: PoissonKind) -> PoissonStructure:
    ring = _product_ring(n, f"{kind.value}({n})")
    builder = _TableBuilder(ring)

    def var(name: str) -> ClassicalPoly:
        return ClassicalPoly.variable(ring, name)

    reductions = []
    relations = []
    for i in range(1, n + 1):
        alpha, alpha_star, tau = var(f"alpha{i}"), var(f"alpha{i}*"), var(f"tau{i}")
        builder.set(f"alpha{i}", f"tau{i}", -2 * alpha * tau)
        builder.set(f"alpha{i}", f"alpha{i}*", 2 * (tau * tau - alpha * alpha_star))
        reductions.append(
            ReductionRule(ring.index(f"alpha{i}*"), ring.index(f"alpha{i}"), tau - tau * tau)
        )
        relations.append(alpha_star * alpha - tau + tau * tau)
    return PoissonStructure(kind, n, ring, builder.table, reductions, relations)


@lru_cache(maxsize=None)
def product_podles(n: int) -> PoissonStructure:
    """n-fold product of the standard Podles Poisson sphere."""
    _require_positive(n)
    return _build_product(n, PoissonKind.PRODUCT_PODLES)


@lru_cache(maxsize=None)
def podles_standard() -> PoissonStructure:
    """The standard Podles Poisson sphere (alpha1, alpha1*, tau1)."""
    return _build_product(1, PoissonKind.PODLES_STANDARD)


@lru_cache(maxsize=None)
def even_sphere_coinduced(n: int) -> PoissonStructure:
    """The bracket on S^{2n} coinduced by the suspension map from the product of spheres."""
    _require_positive(n)
    ring = _sphere_ring(n)
    builder = _TableBuilder(ring)

    def var(name: str) -> ClassicalPoly:
        return ClassicalPoly.variable(ring, name)

    t = var("t")
    for k in range(1, n + 1):
        a_k, a_k_star = var(f"a{k}"), var(f"a{k}*")
        builder.set(f"a{k}", "t", -2 * a_k * t)
        lower = sum((var(f"a{l}") * var(f"a{l}*") for l in range(1, k)), ClassicalPoly.zero(ring))
        builder.set(f"a{k}", f"a{k}*", 2 * t * t + 2 * lower - 2 * a_k * a_k_star)
        for l in range(1, n + 1):
            if l == k:
                continue
            if k < l:
                builder.set(f"a{k}", f"a{l}", a_k * var(f"a{l}"))
            builder.set(f"a{k}", f"a{l}*", -3 * a_k * var(f"a{l}*"))

    lower_sum = sum(
        (var(f"a{l}*") * var(f"a{l}") for l in range(1, n)), ClassicalPoly.zero(ring)
    )
    reduction = ReductionRule(ring.index(f"a{n}*"), ring.index(f"a{n}"), t - t * t - lower_sum)
    relation = lower_sum + var(f"a{n}*") * var(f"a{n}") - t + t * t
    return PoissonStructure(
        PoissonKind.EVEN_SPHERE_COINDUCED, n, ring, builder.table, [reduction], [relation]
    )


@lru_cache(maxsize=None)
def chart_plane(n: int) -> PoissonStructure:
    """Brackets of the complex coordinates z_k = a_k / t on the complement of the north pole."""
    _require_positive(n)
    ring = _chart_ring(n)
    builder = _TableBuilder(ring)

    def var(name: str) -> ClassicalPoly:
        return ClassicalPoly.variable(ring, name)

    for k in range(1, n + 1):
        z_k = var(f"z{k}")
        modulus = sum(
            (var(f"z{l}") * var(f"z{l}*") for l in range(1, k + 1)), ClassicalPoly.zero(ring)
        )
        builder.set(f"z{k}", f"z{k}*", 2 + 2 * modulus)
        for l in range(1, n + 1):
            if l == k:
                continue
            if k < l:
                builder.set(f"z{k}", f"z{l}", z_k * var(f"z{l}"))
            builder.set(f"z{k}", f"z{l}*", z_k * var(f"z{l}*"))
    return PoissonStructure(PoissonKind.CHART_PLANE, n, ring, builder.table)


def get_structure(kind: "PoissonKind | str", n: int = 1) -> PoissonStructure:
    """
    Look up a Poisson structure by kind (or kind name) and n.

    Raises:
        ValueError: If the kind is unknown or n is not positive
        PresetMismatchError: If PodlesStandard is requested with n != 1
    """
    if isinstance(kind, str):
        kind = PoissonKind.parse(kind)
    if kind is PoissonKind.PODLES_STANDARD:
        if n != 1:
            raise PresetMismatchError(f"PodlesStandard has n = 1, got {n}")
        return podles_standard()
    if kind is PoissonKind.PRODUCT_PODLES:
        return product_podles(n)
    if kind is PoissonKind.EVEN_SPHERE_COINDUCED:
        return even_sphere_coinduced(n)
    return chart_plane(n)
