"""
Algebra presets: generator sets, word order and oriented rewrite rules.

Each preset is a free *-algebra on a finite generator set modulo a table of
length-2 rewrite rules. Rules are keyed by the pair of generator ranks on their
left-hand side and always move lower-ranked generators to the left, so every
rule strictly decreases the degree-lexicographic word order.

Presets are built once per (kind, n) by the cached factory functions and are
shared by every polynomial over them. A preset owns the memo tables of the
rewriting engine; memo entries are pure functions of the word, so concurrent
fills are harmless.

Usage:
    from src.ncalg.presets import even_sphere

    A = even_sphere(2)
    A.rank_of("a1*")        # 1
    A.word_text((0, 1, 2))  # 't * a1* * a1'
"""

import logging
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from src.exceptions import PresetMismatchError
from src.ncalg.generators import Family, GeneratorId, PresetKind
from src.scalars import ONE, Q, LaurentQ

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
RuleRhs = Tuple[Tuple[Word, LaurentQ], ...]
RuleTable = Mapping[Tuple[int, int], RuleRhs]
GeneratorLike = Union[int, str, GeneratorId]

STRATEGIES = ("leftmost", "rightmost")

# Display names per family: (t-like, a-like)
_FAMILY_NAMES = {
    PresetKind.EVEN_SPHERE: ("t", "a"),
    PresetKind.ODD_PLANE: ("y", "x"),
    PresetKind.PODLES_SPHERE: ("tau", "alpha"),
    PresetKind.PODLES_PRODUCT_POWER: ("tau", "alpha"),
}


class AlgebraPreset:
    """
    A generator set with its word order, star map and oriented relation table.

    Attributes:
        kind: Preset kind
        n: Number of a-type generator pairs (tensor copies for product presets)
        generators: Generators in rank order
        names: Display name of each generator, indexed by rank
        rules: Read-only map (rank, rank) -> ((word, coefficient), ...)
        label: Human-readable label, e.g. "EvenSphere(2)"
    """

    def __init__(
        self,
        kind: PresetKind,
        n: int,
        generators: Sequence[GeneratorId],
        names: Sequence[str],
        rules: Mapping[Tuple[int, int], RuleRhs],
        label: Optional[str] = None,
    ):
        if len(generators) != len(names):
            raise ValueError("Every generator needs exactly one display name")
        self.kind = kind
        self.n = n
        self.generators: Tuple[GeneratorId, ...] = tuple(generators)
        self.names: Tuple[str, ...] = tuple(names)
        self.rules: RuleTable = MappingProxyType(dict(rules))
        self.label = label or f"{kind.value}({n})"

        self._rank_by_id: Dict[GeneratorId, int] = {g: r for r, g in enumerate(self.generators)}
        self._rank_by_name: Dict[str, int] = {name: r for r, name in enumerate(self.names)}
        self.star_ranks: Tuple[int, ...] = tuple(self._rank_by_id[g.star()] for g in self.generators)

        # strategy -> word -> (normal terms, rewrite height)
        self._memo: Dict[str, Dict[Word, Tuple[Dict[Word, LaurentQ], int]]] = {
            strategy: {} for strategy in STRATEGIES
        }
        logger.debug(f"Built preset {self.label} with {len(self.rules)} rules")

    # ---- generator lookup ----

    @property
    def size(self) -> int:
        return len(self.generators)

    def rank_of(self, generator: GeneratorLike) -> int:
        """
        Resolve a rank, display name or GeneratorId to a rank.

        Raises:
            PresetMismatchError: If the generator does not belong to this preset
        """
        if isinstance(generator, bool):
            raise PresetMismatchError(f"Not a generator: {generator!r}")
        if isinstance(generator, int):
            if 0 <= generator < self.size:
                return generator
            raise PresetMismatchError(f"Rank {generator} out of range for {self.label}")
        if isinstance(generator, GeneratorId):
            rank = self._rank_by_id.get(generator)
        elif isinstance(generator, str):
            rank = self._rank_by_name.get(generator.strip())
        else:
            rank = None
        if rank is None:
            raise PresetMismatchError(f"Unknown generator {generator!r} for {self.label}")
        return rank

    def has_generator(self, name: str) -> bool:
        return name in self._rank_by_name

    def name_of(self, rank: int) -> str:
        return self.names[rank]

    def t_ranks(self) -> List[int]:
        """Ranks of the t-like generators."""
        return [r for r, g in enumerate(self.generators) if g.family is Family.T]

    def a_ranks(self, starred: bool = False) -> List[int]:
        """Ranks of the a-like (or a*-like) generators in index order."""
        family = Family.A_STAR if starred else Family.A
        return [r for r, g in enumerate(self.generators) if g.family is family]

    # ---- words ----

    def word_from(self, generators: Sequence[GeneratorLike]) -> Word:
        return tuple(self.rank_of(g) for g in generators)

    def star_word(self, word: Word) -> Word:
        """Reverse the word and star each letter."""
        return tuple(self.star_ranks[r] for r in reversed(word))

    def is_normal(self, word: Word) -> bool:
        """A word is normal when no adjacent pair is a rule left-hand side."""
        return not any((word[i], word[i + 1]) in self.rules for i in range(len(word) - 1))

    def word_text(self, word: Word) -> str:
        """Canonical text of a word: runs of equal letters as powers, joined by ' * '."""
        if not word:
            return "1"
        parts = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            run = j - i
            name = self.names[word[i]]
            parts.append(name if run == 1 else f"{name}^{run}")
            i = j
        return " * ".join(parts)

    # ---- identity / variants ----

    @property
    def key(self) -> Tuple[str, int, str]:
        return (self.kind.value, self.n, self.label)

    def same_shape(self, other: "AlgebraPreset") -> bool:
        """True when both presets have the same generators in the same rank order."""
        return self.generators == other.generators

    def with_rules(
        self, overrides: Mapping[Tuple[int, int], RuleRhs], label: Optional[str] = None
    ) -> "AlgebraPreset":
        """
        Return a new preset with some rules replaced (or added).

        The copy gets its own memo tables. Used to build deliberately broken
        rule tables for negative controls.
        """
        rules = dict(self.rules)
        rules.update(overrides)
        return AlgebraPreset(
            self.kind,
            self.n,
            self.generators,
            self.names,
            rules,
            label=label or f"{self.label}[modified]",
        )

    def clear_memo(self) -> None:
        for table in self._memo.values():
            table.clear()

    def __repr__(self) -> str:
        return f"AlgebraPreset({self.label})"


# ============================================================================
# Rule tables
# ============================================================================


def _sphere_type_rules(n: int, with_modulus: bool) -> Dict[Tuple[int, int], RuleRhs]:
    """
    Oriented relations of the odd plane (and, with the modulus rule, of the even sphere).

    Ranks: t = 0, a_i* = 2i - 1, a_i = 2i.
    """
    t = 0

    def star(i: int) -> int:
        return 2 * i - 1

    def gen(i: int) -> int:
        return 2 * i

    one_minus_q2 = 1 - Q**2
    rules: Dict[Tuple[int, int], RuleRhs] = {}
    for i in range(1, n + 1):
        rules[(gen(i), t)] = (((t, gen(i)), Q**2),)
        rules[(star(i), t)] = (((t, star(i)), Q**-2),)
        for j in range(i + 1, n + 1):
            rules[(gen(j), gen(i))] = (((gen(i), gen(j)), Q),)
            rules[(star(j), gen(i))] = (((gen(i), star(j)), Q**-3),)
            rules[(gen(j), star(i))] = (((star(i), gen(j)), Q**3),)
            rules[(star(j), star(i))] = (((star(i), star(j)), Q**-1),)
        same_index = [((star(i), gen(i)), Q**2)]
        same_index += [((star(l), gen(l)), Q**2 * one_minus_q2) for l in range(1, i)]
        same_index.append(((t, t), one_minus_q2))
        rules[(gen(i), star(i))] = tuple(same_index)

    if with_modulus:
        # a_n* a_n = q^-2 (t - t^2) - sum_{i<n} a_i* a_i
        modulus = [((t,), Q**-2), ((t, t), -(Q**-2))]
        modulus += [((star(l), gen(l)), -ONE) for l in range(1, n)]
        rules[(star(n), gen(n))] = tuple(modulus)
    return rules


def _sphere_type_generators(n: int) -> List[GeneratorId]:
    generators = [GeneratorId(Family.T)]
    for i in range(1, n + 1):
        generators.append(GeneratorId(Family.A_STAR, i))
        generators.append(GeneratorId(Family.A, i))
    return generators


def _product_rules(n: int) -> Dict[Tuple[int, int], RuleRhs]:
    """
    n commuting copies of the Podles sphere relations.

    Ranks: tau_i = 3(i-1), alpha_i* = 3(i-1) + 1, alpha_i = 3(i-1) + 2.
    """
    rules: Dict[Tuple[int, int], RuleRhs] = {}
    for i in range(n):
        tau, alpha_star, alpha = 3 * i, 3 * i + 1, 3 * i + 2
        rules[(alpha, tau)] = (((tau, alpha), Q**2),)
        rules[(alpha_star, tau)] = (((tau, alpha_star), Q**-2),)
        rules[(alpha, alpha_star)] = (
            ((alpha_star, alpha), Q**2),
            ((tau, tau), 1 - Q**2),
        )
        rules[(alpha_star, alpha)] = (((tau,), Q**-2), ((tau, tau), -(Q**-2)))
        for j in range(i + 1, n):
            for later in (3 * j, 3 * j + 1, 3 * j + 2):
                for earlier in (tau, alpha_star, alpha):
                    rules[(later, earlier)] = (((earlier, later), ONE),)
    return rules


def _names_for(kind: PresetKind, generators: Sequence[GeneratorId], indexed_t: bool) -> List[str]:
    t_name, a_name = _FAMILY_NAMES[kind]
    names = []
    for g in generators:
        if g.family is Family.T:
            names.append(f"{t_name}{g.index}" if indexed_t else t_name)
        elif g.family is Family.A_STAR:
            names.append(f"{a_name}{g.index}*")
        else:
            names.append(f"{a_name}{g.index}")
    return names


# ============================================================================
# Factories
# ============================================================================


def _require_positive(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


@lru_cache(maxsize=None)
def odd_plane(n: int) -> AlgebraPreset:
    """Pol of the odd quantum plane: generators y, x_i, x_i* with the plane relations."""
    _require_positive(n)
    generators = _sphere_type_generators(n)
    return AlgebraPreset(
        PresetKind.ODD_PLANE,
        n,
        generators,
        _names_for(PresetKind.ODD_PLANE, generators, indexed_t=False),
        _sphere_type_rules(n, with_modulus=False),
    )


@lru_cache(maxsize=None)
def even_sphere(n: int) -> AlgebraPreset:
    """Pol of the quantum even sphere: the odd plane modulo the modulus relation."""
    _require_positive(n)
    generators = _sphere_type_generators(n)
    return AlgebraPreset(
        PresetKind.EVEN_SPHERE,
        n,
        generators,
        _names_for(PresetKind.EVEN_SPHERE, generators, indexed_t=False),
        _sphere_type_rules(n, with_modulus=True),
    )


@lru_cache(maxsize=None)
def podles_product_power(n: int) -> AlgebraPreset:
    """n commuting copies of the standard Podles sphere (tau_i, alpha_i, alpha_i*)."""
    _require_positive(n)
    generators = []
    for i in range(1, n + 1):
        generators += [
            GeneratorId(Family.T, i),
            GeneratorId(Family.A_STAR, i),
            GeneratorId(Family.A, i),
        ]
    return AlgebraPreset(
        PresetKind.PODLES_PRODUCT_POWER,
        n,
        generators,
        _names_for(PresetKind.PODLES_PRODUCT_POWER, generators, indexed_t=True),
        _product_rules(n),
    )


@lru_cache(maxsize=None)
def podles_sphere() -> AlgebraPreset:
    """The standard Podles sphere: one copy of the product preset, labelled on its own."""
    base = podles_product_power(1)
    return AlgebraPreset(
        PresetKind.PODLES_SPHERE,
        1,
        base.generators,
        base.names,
        base.rules,
        label="PodlesSphere",
    )


def get_preset(kind: Union[PresetKind, str], n: int = 1) -> AlgebraPreset:
    """
    Look up a preset by kind (or kind name) and n.

    Raises:
        ValueError: If the kind is unknown or n is not positive
        PresetMismatchError: If PodlesSphere is requested with n != 1
    """
    if isinstance(kind, str):
        kind = PresetKind.parse(kind)
    if kind is PresetKind.PODLES_SPHERE:
        if n != 1:
            raise PresetMismatchError(f"PodlesSphere has n = 1, got {n}")
        return podles_sphere()
    if kind is PresetKind.PODLES_PRODUCT_POWER:
        return podles_product_power(n)
    if kind is PresetKind.EVEN_SPHERE:
        return even_sphere(n)
    return odd_plane(n)


def corrupted_preset(base: AlgebraPreset) -> AlgebraPreset:
    """
    Return a copy of `base` whose first t-commutation rule has a wrong power of q.

    The resulting rule table is not confluent; it is the negative control of the
    confluence checker.
    """
    t = base.t_ranks()[0]
    a = next(r for r in base.a_ranks() if (r, t) in base.rules)
    return base.with_rules({(a, t): (((t, a), Q**3),)}, label=f"{base.label}[corrupted]")
