"""
Rewriting engine: reduce words to normal form under a preset's rule table.

Reduction picks one redex per step (the leftmost or the rightmost adjacent pair
that is a rule left-hand side), substitutes the right-hand side and recurses on
every resulting word. Results are memoized per preset and strategy, together with
the rewrite height (longest chain of rule applications below the word).
"""

import logging
from typing import Dict, Mapping, Optional, Tuple

from src.config import settings
from src.exceptions import RewriteBudgetExceeded
from src.ncalg.presets import STRATEGIES, AlgebraPreset, Word
from src.scalars import ONE, LaurentQ

logger = logging.getLogger(__name__)


def step_budget(length: int) -> int:
    """Maximum rewrite height allowed for a word of the given length."""
    return settings.step_budget_factor * (length + 1) ** 2


def _find_redex(preset: AlgebraPreset, word: Word, strategy: str) -> Optional[int]:
    positions = range(len(word) - 1)
    if strategy == "rightmost":
        positions = reversed(positions)
    for i in positions:
        if (word[i], word[i + 1]) in preset.rules:
            return i
    return None


def _accumulate(acc: Dict[Word, LaurentQ], word: Word, coeff: LaurentQ) -> None:
    total = acc.get(word)
    total = coeff if total is None else total + coeff
    if total.is_zero():
        acc.pop(word, None)
    else:
        acc[word] = total


def _reduce(
    preset: AlgebraPreset, word: Word, strategy: str, depth: int, budget: int
) -> Tuple[Dict[Word, LaurentQ], int]:
    memo = preset._memo[strategy]
    cached = memo.get(word)
    if cached is not None:
        return cached
    if depth > budget:
        raise RewriteBudgetExceeded(
            f"Reduction in {preset.label} exceeded {budget} nested rewrites "
            f"at word '{preset.word_text(word)}'"
        )

    position = _find_redex(preset, word, strategy)
    if position is None:
        result: Tuple[Dict[Word, LaurentQ], int] = ({word: ONE}, 0)
    else:
        prefix, suffix = word[:position], word[position + 2 :]
        acc: Dict[Word, LaurentQ] = {}
        height = 0
        for rhs, coeff in preset.rules[(word[position], word[position + 1])]:
            sub_terms, sub_height = _reduce(preset, prefix + rhs + suffix, strategy, depth + 1, budget)
            height = max(height, sub_height)
            for sub_word, sub_coeff in sub_terms.items():
                _accumulate(acc, sub_word, coeff * sub_coeff)
        result = (acc, height + 1)

    memo[word] = result
    return result


def reduce_word(
    preset: AlgebraPreset, word: Word, strategy: str = "leftmost"
) -> Dict[Word, LaurentQ]:
    """
    Normal form of a single word as a map normal word -> coefficient.

    Args:
        preset: Algebra preset whose rules apply
        word: Sequence of generator ranks
        strategy: "leftmost" or "rightmost" redex selection

    Returns:
        Map from normal words to nonzero coefficients (shared memo value; do not mutate)

    Raises:
        ValueError: If the strategy is unknown
        RewriteBudgetExceeded: If the rewrite height exceeds step_budget(len(word))
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"Unknown strategy '{strategy}'. Valid strategies: {', '.join(STRATEGIES)}")
    budget = step_budget(len(word))
    terms, height = _reduce(preset, word, strategy, 0, budget)
    if height > budget:
        raise RewriteBudgetExceeded(
            f"Word '{preset.word_text(word)}' needed {height} rewrites (budget {budget})"
        )
    return terms


def rewrite_height(preset: AlgebraPreset, word: Word, strategy: str = "leftmost") -> int:
    """Longest chain of rule applications used to normalize `word`."""
    reduce_word(preset, word, strategy)
    return preset._memo[strategy][word][1]


def reduce_terms(
    preset: AlgebraPreset, terms: Mapping[Word, LaurentQ], strategy: str = "leftmost"
) -> Dict[Word, LaurentQ]:
    """Normalize a linear combination of words."""
    acc: Dict[Word, LaurentQ] = {}
    for word, coeff in terms.items():
        if coeff.is_zero():
            continue
        for normal_word, normal_coeff in reduce_word(preset, word, strategy).items():
            _accumulate(acc, normal_word, coeff * normal_coeff)
    return acc
