"""
Fock-space representations of the sphere presets.

On one factor l^2(N), truncated to N levels:

    sigma(alpha)|k>      = q^(k-1) (1 - q^(2k))^(1/2) |k-1>
    sigma(tau)|k>        = q^(2k) |k>
    sigma(tau^(1/2))|k>  = q^k |k>

and sigma(alpha*) is the transpose of sigma(alpha). The even sphere acts on the
n-fold tensor product by

    sigma_n(a_i) = tau^(1/2) x ... x tau^(1/2) x alpha x tau x ... x tau   (alpha in slot i)
    sigma_n(t)   = tau x ... x tau

while the product preset uses alpha_i, tau_i in slot i and identities elsewhere.

Within each factor a normal word lowers before it raises, so the represented
normal words are exact compressions of the infinite-dimensional operators.
Raw words (relation left-hand sides) are exact only away from the truncation
edge, which is what the safe-subspace margin accounts for.
"""

import logging
import math
from functools import lru_cache
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence

import numpy as np
import scipy.sparse as sps

from src.exceptions import PresetMismatchError
from src.fockrep.space import SparseOperator, TruncatedFock
from src.models.numerics import TailBound
from src.ncalg import (
    AlgebraPreset,
    Family,
    NCPoly,
    PresetKind,
    Word,
    epsilon,
    even_sphere,
    star,
)
from src.scalars import LaurentQ, laurent_eval

logger = logging.getLogger(__name__)

SYMBOLS = ("alpha", "alpha*", "tau", "tau^1/2")

_REPRESENTED_KINDS = (
    PresetKind.EVEN_SPHERE,
    PresetKind.PODLES_SPHERE,
    PresetKind.PODLES_PRODUCT_POWER,
)


def _validate(q0: float, N: int) -> None:
    if not 0 < q0 < 1:
        raise ValueError(f"q0 must lie strictly between 0 and 1, got {q0}")
    if N < 2:
        raise ValueError(f"N must be at least 2, got {N}")


def q_pochhammer(alpha: float, q0: float, s: int) -> float:
    """
    (alpha; q)_s = prod_{j=1..s} (1 - q^(j-1) alpha); s = 0 gives 1.

    Raises:
        ValueError: If s is negative

    Example:
        >>> q_pochhammer(0.25, 0.25, 2)
        0.703125
    """
    if s < 0:
        raise ValueError(f"s must be nonnegative, got {s}")
    return float(np.prod([1.0 - q0**j * alpha for j in range(s)]))


@lru_cache(maxsize=256)
def _single_site(symbol: str, q0: float, N: int) -> sps.csr_matrix:
    levels = np.arange(N, dtype=float)
    if symbol == "tau":
        return sps.diags(q0 ** (2 * levels), format="csr")
    if symbol == "tau^1/2":
        return sps.diags(q0**levels, format="csr")
    if symbol in ("alpha", "alpha*"):
        k = levels[1:]
        weights = q0 ** (k - 1) * np.sqrt(1.0 - q0 ** (2 * k))
        lowering = sps.diags(weights, offsets=1, shape=(N, N), format="csr")
        return lowering if symbol == "alpha" else sps.csr_matrix(lowering.transpose())
    if symbol == "id":
        return sps.identity(N, format="csr")
    raise ValueError(f"Unknown symbol '{symbol}'. Valid symbols: {', '.join(SYMBOLS)}")


def sigma1(symbol: str, q0: float, N: int) -> SparseOperator:
    """
    One-factor representation matrix of alpha, alpha*, tau or tau^1/2.

    Raises:
        ValueError: On an unknown symbol, q0 outside (0, 1) or N < 2
    """
    _validate(q0, N)
    return SparseOperator(TruncatedFock(n=1, N=N), _single_site(symbol, q0, N))


def _kron_all(factors: Sequence[sps.spmatrix]) -> sps.csr_matrix:
    result = factors[0]
    for factor in factors[1:]:
        result = sps.kron(result, factor, format="csr")
    return sps.csr_matrix(result)


class FockRepresentation:
    """
    Truncated Fock representation of a sphere preset, with cached generator and word matrices.

    Attributes:
        preset: EvenSphere, PodlesSphere or PodlesProductPower preset
        q0: Deformation parameter in (0, 1)
        space: Truncated n-fold Fock space
    """

    def __init__(self, preset: AlgebraPreset, q0: float, N: int):
        _validate(q0, N)
        if preset.kind not in _REPRESENTED_KINDS:
            raise PresetMismatchError(f"No Fock representation registered for {preset.label}")
        self.preset = preset
        self.q0 = float(q0)
        self.space = TruncatedFock(n=preset.n, N=N)
        self._generators = [self._generator_matrix(rank) for rank in range(preset.size)]
        self._words: Dict[Word, sps.csr_matrix] = {}
        logger.debug(f"Built Fock representation of {preset.label} at q0={q0}, N={N}")

    def _factor_symbols(self, rank: int) -> List[str]:
        generator = self.preset.generators[rank]
        n = self.preset.n
        symbol = {Family.A: "alpha", Family.A_STAR: "alpha*"}.get(generator.family)

        if self.preset.kind is not PresetKind.EVEN_SPHERE:
            slot = generator.index - 1
            return [
                (symbol or "tau") if k == slot else "id"
                for k in range(n)
            ]

        if generator.family is Family.T:
            return ["tau"] * n
        i = generator.index - 1
        return ["tau^1/2" if k < i else symbol if k == i else "tau" for k in range(n)]

    def _generator_matrix(self, rank: int) -> sps.csr_matrix:
        N = self.space.N
        return _kron_all([_single_site(s, self.q0, N) for s in self._factor_symbols(rank)])

    def generator(self, name: str) -> SparseOperator:
        return SparseOperator(self.space, self._generators[self.preset.rank_of(name)])

    def word_matrix(self, word: Word) -> sps.csr_matrix:
        """Product of generator matrices along the word (cached)."""
        cached = self._words.get(word)
        if cached is not None:
            return cached
        if not word:
            matrix = sps.identity(self.space.dim, format="csr")
        else:
            matrix = self._generators[word[0]]
            for rank in word[1:]:
                matrix = matrix @ self._generators[rank]
            matrix = sps.csr_matrix(matrix)
        self._words[word] = matrix
        return matrix

    def represent_raw(self, terms: Mapping[Word, LaurentQ]) -> SparseOperator:
        """Represent a linear combination of words without normalizing it first."""
        total = sps.csr_matrix((self.space.dim, self.space.dim))
        for word, coeff in terms.items():
            value = float(laurent_eval(coeff, self.q0))
            if value:
                total = total + value * self.word_matrix(word)
        return SparseOperator(self.space, total)

    def represent(self, f: NCPoly) -> SparseOperator:
        """
        Represent a polynomial over this preset.

        Raises:
            PresetMismatchError: If f is over a different preset
        """
        if f.preset is not self.preset:
            raise PresetMismatchError(f"Polynomial over {f.preset.label} used with {self.preset.label}")
        return self.represent_raw(f.terms)

    def safe_residual(self, op: SparseOperator, margin: int) -> float:
        """Largest column norm of op over basis vectors with every k_i < N - margin."""
        return op.max_column_norm(self.space.interior(margin))


@lru_cache(maxsize=32)
def get_representation(preset: AlgebraPreset, q0: float, N: int) -> FockRepresentation:
    """Cached FockRepresentation per (preset, q0, N)."""
    return FockRepresentation(preset, float(q0), N)


def represent(f: NCPoly, A: AlgebraPreset, q0: float, N: int) -> SparseOperator:
    """
    Represent f on the truncated Fock space.

    Args:
        f: Polynomial in normal form over A
        A: EvenSphere(n), PodlesSphere or PodlesProductPower(n)
        q0: Deformation parameter in (0, 1)
        N: Levels per factor

    Returns:
        SparseOperator on the N^n-dimensional truncation

    Raises:
        PresetMismatchError: If f is not over A or A has no representation
    """
    if f.preset is not A:
        raise PresetMismatchError(f"Polynomial over {f.preset.label} used with {A.label}")
    return get_representation(A, float(q0), N).represent(f)


def represent_word(word: Sequence, A: AlgebraPreset, q0: float, N: int) -> SparseOperator:
    """Represent a raw (possibly non-normal) word given by ranks, names or GeneratorIds."""
    rep = get_representation(A, float(q0), N)
    return SparseOperator(rep.space, rep.word_matrix(A.word_from(word)))


# ============================================================================
# Traces
# ============================================================================


def _has_diagonal_action(preset: AlgebraPreset, word: Word) -> bool:
    """True if the word raises and lowers each a-index equally often (m_i = k_i)."""
    balance: Dict[int, int] = {}
    for rank in word:
        generator = preset.generators[rank]
        if generator.family is Family.A:
            balance[generator.index] = balance.get(generator.index, 0) - 1
        elif generator.family is Family.A_STAR:
            balance[generator.index] = balance.get(generator.index, 0) + 1
    return all(value == 0 for value in balance.values())


def char_trace(f: NCPoly, q0: float, N: int, n: Optional[int] = None) -> TailBound:
    """
    The character trace tr(sigma_n(f) - eps(f)) with a rigorous truncation bound.

    The scalar part eps(f) is removed symbolically, so tr(1) = 0 exactly. Every
    remaining diagonal word has entries bounded by q0^(2 sum k_i), times q0^-2
    when it contains a-letters, which bounds the discarded tail by
    N^(n-1) q0^(2N) / (1 - q0^2)^n per unit coefficient.

    Args:
        f: Polynomial over EvenSphere(n) or PodlesSphere
        q0: Deformation parameter in (0, 1)
        N: Levels per factor
        n: Expected dimension parameter (checked against f's preset when given)

    Returns:
        TailBound(value, bound, roundoff)

    Raises:
        PresetMismatchError: If f is over another preset or n disagrees

    Example:
        >>> A = even_sphere(1)
        >>> char_trace(NCPoly.generator(A, "t"), 0.5, 40).value
        1.3333333333333333
    """
    A = f.preset
    if A.kind not in (PresetKind.EVEN_SPHERE, PresetKind.PODLES_SPHERE):
        raise PresetMismatchError(f"char_trace is defined on even-sphere presets, got {A.label}")
    if n is not None and n != A.n:
        raise PresetMismatchError(f"n = {n} does not match {A.label}")
    _validate(q0, N)
    q0 = float(q0)

    reduced = f - epsilon(f)
    if reduced.is_zero():
        return TailBound(value=0.0, bound=0.0, roundoff=0.0)

    rep = get_representation(A, float(q0), N)
    op = rep.represent(reduced)
    diagonal = op.diagonal()
    value = math.fsum(diagonal)

    tail = N ** (A.n - 1) * q0 ** (2 * N) / (1.0 - q0**2) ** A.n
    eps = float(np.finfo(float).eps)
    bound = 0.0
    longest = 1
    coefficient_error = 0.0
    for word, coeff in reduced.terms.items():
        if not _has_diagonal_action(A, word):
            continue
        weight = abs(float(laurent_eval(coeff, q0)))
        has_a = any(A.generators[r].family is not Family.T for r in word)
        bound += weight * (q0**-2 if has_a else 1.0) * tail
        longest = max(longest, len(word))
        # cancellation when evaluating the coefficient in floating point
        magnitude = sum(abs(float(c)) * q0**k for k, c in coeff.items())
        word_trace = float(np.abs(rep.word_matrix(word).diagonal()).sum())
        coefficient_error += len(coeff.terms) * eps * magnitude * word_trace
    roundoff = 4.0 * (longest + 2) * eps * float(np.abs(diagonal).sum()) + coefficient_error
    return TailBound(value=value, bound=bound, roundoff=roundoff)


# ============================================================================
# Relation and structure checks
# ============================================================================


def verify_relations(A: AlgebraPreset, q0: float, N: int, margin: int) -> float:
    """
    Largest represented residual of A's defining relations on the safe subspace.

    Each rewrite rule lhs -> rhs is read as the relation lhs - rhs; the raw left
    word and the normal right side are represented and their difference applied
    to every basis vector with all k_i < N - margin.

    Raises:
        ValueError: If margin < 2 (relation words have length 2) or leaves no interior
    """
    if margin < 2:
        raise ValueError(f"margin must be at least 2, got {margin}")
    rep = get_representation(A, float(q0), N)
    interior = rep.space.interior(margin)
    worst = 0.0
    for lhs, rhs in A.rules.items():
        terms: Dict[Word, LaurentQ] = {lhs: LaurentQ.constant(1)}
        for word, coeff in rhs:
            terms[word] = terms.get(word, LaurentQ()) - coeff
        residual = rep.represent_raw(terms).max_column_norm(interior)
        logger.debug(f"Relation {A.word_text(lhs)}: residual {residual:.3e}")
        worst = max(worst, residual)
    return worst


def relation_residual(
    terms: Mapping[Word, LaurentQ], A: AlgebraPreset, q0: float, N: int, margin: int
) -> float:
    """Represented residual of an arbitrary raw relation (e.g. the modulus relation)."""
    rep = get_representation(A, float(q0), N)
    return rep.safe_residual(rep.represent_raw(terms), margin)


def adjoint_residual(f: NCPoly, q0: float, N: int) -> float:
    """Largest entry of |sigma(star f) - sigma(f)^T|."""
    A = f.preset
    rep = get_representation(A, float(q0), N)
    difference = rep.represent(star(f, A)) - rep.represent(f).adjoint()
    return difference.max_abs()


def homomorphism_residual(
    f: NCPoly, g: NCPoly, q0: float, N: int, margin: Optional[int] = None
) -> float:
    """
    Largest column norm of sigma(fg) - sigma(f) sigma(g) on the safe subspace.

    The default margin deg f + deg g + 1 keeps every intermediate vector inside the truncation.
    """
    A = f.preset
    rep = get_representation(A, float(q0), N)
    if margin is None:
        margin = max(f.degree, 0) + max(g.degree, 0) + 1
    difference = rep.represent(f * g) - rep.represent(f) @ rep.represent(g)
    return rep.safe_residual(difference, margin)


class SpectrumReport(NamedTuple):
    """Spectrum of sigma_n(t) on the truncation."""

    max_deviation: float
    multiplicity_mismatches: int


def spectrum_check(n: int, q0: float, N: int) -> SpectrumReport:
    """
    Check that every eigenvalue of sigma_n(t) is some q0^(2k), with multiplicity C(k+n-1, n-1) for k < N.
    """
    rep = get_representation(even_sphere(n), float(q0), N)
    diagonal = rep.generator("t").diagonal()
    log_q2 = math.log(q0**2)
    counts: Dict[int, int] = {}
    deviation = 0.0
    for value in diagonal:
        k = int(round(math.log(value) / log_q2))
        deviation = max(deviation, abs(value - q0 ** (2 * k)))
        counts[k] = counts.get(k, 0) + 1
    mismatches = sum(1 for k in range(N) if counts.get(k, 0) != math.comb(k + n - 1, n - 1))
    return SpectrumReport(max_deviation=deviation, multiplicity_mismatches=mismatches)
