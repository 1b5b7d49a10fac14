"""
Verification suites.

Each suite checks one family of identities for a given n and returns a
VerificationReport with one CaseResult per checked instance. Exact identities
pass when the residual is the zero polynomial; numeric ones pass when the
residual is within the configured tolerance or the trace lies within its tail
bound. Suites are independent and run concurrently under "all".

Usage:
    from src.cli.suites import SuiteOptions, run_suites

    report = run_suites(["lemma", "defect"], SuiteOptions(n=2))
    print(report.status)
"""

import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from src.config import settings
from src.fockrep import (
    adjoint_residual,
    char_trace,
    homomorphism_residual,
    lowering_coefficient_check,
    multi_indices,
    psi_gram,
    relation_residual,
    spectrum_check,
    verify_relations,
)
from src.ktheory import (
    ScalingAutomorphism,
    build_e,
    build_G,
    check_defect,
    check_idempotency,
    check_lemma_M,
    check_quotient_defect,
    classical_G,
    expected_trace,
    matrix_trace,
    pair_charge,
    pair_epsilon,
    pairing_cross_check,
    random_sphere_point,
    trace_at_q_one,
)
from src.models.certificates import ResidualTable
from src.models.report import CaseResult, VerificationReport, merge_reports
from src.ncalg import (
    AlgebraPreset,
    NCPoly,
    check_local_confluence,
    corrupted_preset,
    even_sphere,
    normalize,
    odd_plane,
    podles_product_power,
    podles_sphere,
    rename_preset,
)
from src.poisson import (
    ClassicalPoly,
    check_jacobi,
    chart_plane,
    even_sphere_coinduced,
    is_casimir_ideal,
    north_pole_degeneracy,
    pfaffian_oracle_error,
    pfaffian_recursive,
    podles_standard,
    product_podles,
    random_chart_point,
    verify_poisson_map,
    verify_sphere_constraint,
)
from src.scalars import ONE, Q, LaurentQ
from src.semiclassical import verify_semiclassical

logger = logging.getLogger(__name__)

PFAFFIAN_POINTS = 100
CLASSICAL_POINTS = 50
PFAFFIAN_TOLERANCE = 1e-8
CHARGE_TOLERANCE = 1e-6
CHARGE_GRID_Q = (0.3, 0.5, 0.8)
BASIS_TRUNCATION = 8
BASIS_MAX_TOTAL = 3


class SuiteOptions(BaseModel):
    """Parameters shared by all suites."""

    n: int = Field(1, ge=1, description="Dimension parameter")
    q0: float = Field(0.5, gt=0, lt=1, description="Deformation parameter for numeric suites")
    trunc: int = Field(default_factory=lambda: settings.default_trunc, ge=2)
    margin: int = Field(default_factory=lambda: settings.default_margin, ge=2)
    seed: int = Field(default_factory=lambda: settings.random_seed)
    samples: int = Field(default_factory=lambda: settings.random_samples, ge=1)


SuiteFn = Callable[[SuiteOptions], List[CaseResult]]


# ============================================================================
# Case helpers
# ============================================================================


def _status(passed: bool) -> str:
    return "pass" if passed else "fail"


def exact_case(case_id: str, residual: object, started: float) -> CaseResult:
    """Case for an exact identity: passes when the residual is zero."""
    if isinstance(residual, ResidualTable):
        bad = residual.nonzero()
        text = "0" if not bad else f"{bad[0].label}: {bad[0].residual}"
        passed = not bad
    elif hasattr(residual, "nonzero_entries"):
        entries = residual.nonzero_entries()
        passed = not entries
        text = "0" if passed else f"{len(entries)} nonzero entries, first at {entries[0]}"
    else:
        passed = residual.is_zero()
        text = str(residual)
    return CaseResult(
        id=case_id,
        status=_status(passed),
        residual_text=text,
        runtime=time.perf_counter() - started,
    )


def numeric_case(
    case_id: str, residual: float, tolerance: float, started: float, detail: Optional[str] = None
) -> CaseResult:
    """Case for a numeric residual: passes when residual <= tolerance."""
    return CaseResult(
        id=case_id,
        status=_status(residual <= tolerance),
        residual=abs(float(residual)),
        bound=tolerance,
        runtime=time.perf_counter() - started,
        detail=detail,
    )


def flag_case(case_id: str, passed: bool, started: float, detail: Optional[str] = None) -> CaseResult:
    return CaseResult(
        id=case_id, status=_status(passed), runtime=time.perf_counter() - started, detail=detail
    )


def random_words(A: AlgebraPreset, rng: random.Random, count: int, max_length: int = 4) -> List[tuple]:
    """Random generator words of length 1..max_length."""
    return [
        tuple(rng.randrange(A.size) for _ in range(rng.randint(1, max_length)))
        for _ in range(count)
    ]


def random_expression(
    A: AlgebraPreset, rng: random.Random, max_terms: int = 3, max_length: int = 6
) -> Dict[tuple, LaurentQ]:
    """
    Random raw expression: up to max_terms words of length 1..max_length with
    nonzero coefficients c * q^e, c in -3..3 and e in -2..2.
    """
    expression: Dict[tuple, LaurentQ] = {}
    for word in random_words(A, rng, rng.randint(1, max_terms), max_length):
        coeff = LaurentQ.q_power(rng.randint(-2, 2), rng.choice((-3, -2, -1, 1, 2, 3)))
        expression[word] = expression.get(word, LaurentQ()) + coeff
    return expression


def _presets(n: int) -> List[AlgebraPreset]:
    presets = [odd_plane(n), even_sphere(n), podles_product_power(n)]
    if n == 1:
        presets.append(podles_sphere())
    return presets


# ============================================================================
# Symbolic suites
# ============================================================================


def suite_confluence(options: SuiteOptions) -> List[CaseResult]:
    """Local confluence of every preset, the corrupted control, strategy independence and associativity."""
    cases = []
    for A in _presets(options.n):
        started = time.perf_counter()
        report = check_local_confluence(A)
        cases.append(
            flag_case(
                f"{A.label}:overlaps",
                report.is_confluent,
                started,
                detail=f"{report.overlaps_checked} overlaps, {len(report.unresolved)} unresolved",
            )
        )

    started = time.perf_counter()
    corrupted = check_local_confluence(corrupted_preset(even_sphere(options.n)))
    cases.append(flag_case("corrupted:detected", not corrupted.is_confluent, started))

    rng = random.Random(options.seed)
    for A in _presets(options.n):
        started = time.perf_counter()
        mismatches = 0
        for _ in range(options.samples):
            expression = random_expression(A, rng, max_length=6)
            left = normalize(expression, A, strategy="leftmost")
            right = normalize(expression, A, strategy="rightmost")
            mismatches += left != right
        cases.append(
            flag_case(f"{A.label}:strategy", mismatches == 0, started, detail=f"{mismatches} mismatches")
        )

    triples = min(options.samples, 100)
    for A in _presets(options.n):
        started = time.perf_counter()
        failures = 0
        for _ in range(triples):
            f, g, h = (NCPoly(A, random_expression(A, rng, max_length=2)) for _ in range(3))
            failures += (f * g) * h != f * (g * h)
        cases.append(
            flag_case(f"{A.label}:associativity", failures == 0, started, detail=f"{failures} failures")
        )
    return cases


def suite_jacobi(options: SuiteOptions) -> List[CaseResult]:
    """Jacobi identity on every structure and the Poisson-ideal property of the relations."""
    n = options.n
    structures = [even_sphere_coinduced(n), product_podles(n), chart_plane(n), podles_standard()]
    cases = []
    for P in structures:
        started = time.perf_counter()
        cases.append(exact_case(f"{P.label}:jacobi", check_jacobi(P), started))
    for P in (even_sphere_coinduced(n), product_podles(n)):
        started = time.perf_counter()
        cases.append(flag_case(f"{P.label}:poisson-ideal", is_casimir_ideal(P), started))
    return cases


def suite_poisson_map(options: SuiteOptions) -> List[CaseResult]:
    """The suspension map is Poisson on each generator pair; the north pole is a point leaf."""
    started = time.perf_counter()
    table = verify_poisson_map(options.n)
    cases = [
        CaseResult(
            id=entry.label,
            status=_status(entry.is_zero),
            residual_text=entry.residual,
            runtime=(time.perf_counter() - started) / max(len(table.entries), 1),
        )
        for entry in table.entries
    ]
    started = time.perf_counter()
    cases.append(numeric_case("north-pole", north_pole_degeneracy(options.n), 0.0, started))
    return cases


def suite_constraint(options: SuiteOptions) -> List[CaseResult]:
    started = time.perf_counter()
    return [exact_case("sphere-constraint", verify_sphere_constraint(options.n), started)]


def suite_semiclassical(options: SuiteOptions) -> List[CaseResult]:
    """Semiclassical limits against the classical brackets, on every generator pair."""
    cases = []
    started = time.perf_counter()
    for entry in verify_semiclassical(options.n).entries:
        cases.append(
            CaseResult(id=entry.label, status=_status(entry.is_zero), residual_text=entry.residual)
        )
    if options.n == 1:
        table = verify_semiclassical(1, kind=podles_sphere().kind)
        cases.append(exact_case("PodlesSphere", table, started))
    return cases


def suite_lemma(options: SuiteOptions) -> List[CaseResult]:
    cases = []
    for k in range(options.n):
        for l in range(k + 1, options.n + 1):
            started = time.perf_counter()
            cases.append(exact_case(f"k={k},l={l}", check_lemma_M(options.n, k, l), started))
    return cases


def suite_defect(options: SuiteOptions) -> List[CaseResult]:
    cases = []
    for k in range(options.n + 1):
        started = time.perf_counter()
        cases.append(exact_case(f"k={k}", check_defect(options.n, k), started))
    started = time.perf_counter()
    cases.append(exact_case("quotient", check_quotient_defect(options.n), started))
    return cases


def suite_idempotency(options: SuiteOptions) -> List[CaseResult]:
    """G^2 = G over the sphere; the scaling map is an automorphism of the plane only."""
    n = options.n
    started = time.perf_counter()
    cases = [exact_case("G^2-G", check_idempotency(n), started)]

    started = time.perf_counter()
    plane_scaling = ScalingAutomorphism(odd_plane(n))
    sphere_scaling = ScalingAutomorphism(even_sphere(n))
    cases.append(
        flag_case(
            "scaling-descends",
            plane_scaling.is_well_defined() and not sphere_scaling.is_well_defined(),
            started,
        )
    )

    rng = random.Random(options.seed)
    A = odd_plane(n)
    started = time.perf_counter()
    failures = 0
    words = random_words(A, rng, 2 * min(options.samples, 50), max_length=3)
    for left, right in zip(words[::2], words[1::2]):
        f = NCPoly(A, {left: 1, (): 2})
        g = NCPoly(A, {right: Q})
        failures += not plane_scaling.homomorphism_residual(f, g).is_zero()
    cases.append(flag_case("scaling-homomorphism", failures == 0, started, detail=f"{failures} failures"))
    return cases


def suite_traces(options: SuiteOptions) -> List[CaseResult]:
    """Closed trace formulas, the q = 1 limit, and character values."""
    n, q0, N = options.n, options.q0, options.trunc
    cases = []
    for k in range(1, n + 1):
        started = time.perf_counter()
        residual = matrix_trace(build_e(n, k)) - expected_trace(n, k)
        cases.append(exact_case(f"Tr e_{k}", residual, started))

    started = time.perf_counter()
    expected = rename_preset(expected_trace(n, n), even_sphere(n))
    cases.append(exact_case("Tr G", matrix_trace(build_G(n)) - expected, started))

    started = time.perf_counter()
    at_one = trace_at_q_one(n)
    cases.append(exact_case("q=1", at_one - ClassicalPoly.constant(at_one.ring, 2 ** (n - 1)), started))

    A = even_sphere(n)
    started = time.perf_counter()
    unit = char_trace(NCPoly.one(A), q0, N)
    cases.append(flag_case("char(1)", unit.value == 0.0 and unit.bound == 0.0, started))

    t = NCPoly.generator(A, "t")
    for power in (1, 2):
        started = time.perf_counter()
        result = char_trace(t**power, q0, N)
        target = 1.0 / (1.0 - q0 ** (2 * power)) ** n
        cases.append(
            CaseResult(
                id=f"char(t^{power})",
                status=_status(result.contains(target)),
                residual=abs(result.value - target),
                bound=result.bound + result.roundoff,
                runtime=time.perf_counter() - started,
            )
        )
    return cases


def suite_pairings(options: SuiteOptions) -> List[CaseResult]:
    """Counit and character pairings with G, plus the classical rank oracle."""
    n = options.n
    started = time.perf_counter()
    epsilon_value = pair_epsilon(n)
    cases = [flag_case("epsilon", epsilon_value == 2 ** (n - 1), started, detail=str(epsilon_value))]

    started = time.perf_counter()
    charge = pair_charge(n, options.q0, options.trunc)
    cases.append(
        CaseResult(
            id="charge",
            status=_status(charge.contains(-1.0) and abs(charge.value + 1.0) <= CHARGE_TOLERANCE),
            residual=abs(charge.value + 1.0),
            bound=charge.bound + charge.roundoff,
            runtime=time.perf_counter() - started,
        )
    )
    for q0 in CHARGE_GRID_Q:
        started = time.perf_counter()
        grid_charge = pair_charge(n, q0, 80 if q0 >= 0.8 else 60)
        within = abs(grid_charge.value + 1.0) <= CHARGE_TOLERANCE
        cases.append(
            CaseResult(
                id=f"charge@q={q0}",
                status=_status(grid_charge.contains(-1.0) and within),
                residual=abs(grid_charge.value + 1.0),
                bound=grid_charge.bound + grid_charge.roundoff,
                runtime=time.perf_counter() - started,
            )
        )
    if n <= 2:
        started = time.perf_counter()
        cases.append(
            numeric_case(
                "charge-matrix-path",
                pairing_cross_check(n, options.q0, options.trunc),
                settings.float_tolerance,
                started,
            )
        )

    rng = np.random.default_rng(options.seed)
    started = time.perf_counter()
    worst_defect = 0.0
    worst_trace = 0.0
    for _ in range(CLASSICAL_POINTS):
        t, a = random_sphere_point(n, rng)
        projector = classical_G(n, t, a)
        worst_defect = max(worst_defect, projector.idempotency_defect)
        worst_trace = max(worst_trace, abs(projector.trace - 2 ** (n - 1)))
    cases.append(numeric_case("classical-idempotent", worst_defect, 1e-12, started))
    cases.append(numeric_case("classical-rank", worst_trace, 1e-12, started))
    return cases


# ============================================================================
# Numeric suites
# ============================================================================


def relation_truncation(n: int) -> int:
    """Fock levels for relation checks: 30 per factor up to n = 2, fewer beyond."""
    return 30 if n <= 2 else 12 if n == 3 else 6


def suite_relations(options: SuiteOptions) -> List[CaseResult]:
    """Represented relations, the modulus relation, adjointness and multiplicativity."""
    n, q0 = options.n, options.q0
    N = relation_truncation(n)
    tolerance = settings.relation_tolerance
    A = even_sphere(n)
    cases = []

    started = time.perf_counter()
    cases.append(numeric_case(A.label, verify_relations(A, q0, N, options.margin), tolerance, started))

    started = time.perf_counter()
    t = A.t_ranks()[0]
    raw = {(t,): -ONE, (t, t): ONE}
    for a_star, a in zip(A.a_ranks(starred=True), A.a_ranks()):
        raw[(a_star, a)] = Q**2
    cases.append(numeric_case("modulus", relation_residual(raw, A, q0, N, options.margin), tolerance, started))

    if n == 1:
        started = time.perf_counter()
        P = podles_sphere()
        cases.append(numeric_case(P.label, verify_relations(P, q0, N, options.margin), tolerance, started))

    started = time.perf_counter()
    spectrum = spectrum_check(n, q0, N)
    cases.append(
        flag_case(
            "spectrum(t)",
            spectrum.max_deviation <= tolerance and spectrum.multiplicity_mismatches == 0,
            started,
            detail=f"deviation {spectrum.max_deviation:.2e}",
        )
    )

    rng = random.Random(options.seed)
    words = random_words(A, rng, 6, max_length=2)
    started = time.perf_counter()
    worst_adjoint = max(adjoint_residual(NCPoly(A, {w: 1}), q0, N) for w in words)
    cases.append(numeric_case("adjoint", worst_adjoint, tolerance, started))

    started = time.perf_counter()
    worst_product = max(
        homomorphism_residual(NCPoly(A, {u: 1}), NCPoly(A, {v: 1}), q0, N)
        for u, v in zip(words[::2], words[1::2])
    )
    cases.append(numeric_case("homomorphism", worst_product, settings.float_tolerance, started))
    return cases


def suite_lowering(options: SuiteOptions) -> List[CaseResult]:
    cases = []
    for m in multi_indices(options.n, BASIS_MAX_TOTAL):
        for i in range(1, options.n + 1):
            started = time.perf_counter()
            residual = lowering_coefficient_check(i, m, options.q0, BASIS_TRUNCATION)
            cases.append(numeric_case(f"i={i},m={m}", residual, settings.float_tolerance, started))
    return cases


def suite_gram(options: SuiteOptions) -> List[CaseResult]:
    started = time.perf_counter()
    m_list = multi_indices(options.n, BASIS_MAX_TOTAL)
    gram = psi_gram(m_list, options.q0, BASIS_TRUNCATION)
    deviation = float(np.abs(gram - np.eye(len(m_list))).max())
    return [numeric_case(f"{len(m_list)} vectors", deviation, settings.float_tolerance, started)]


def suite_pfaffian(options: SuiteOptions) -> List[CaseResult]:
    """det S = Pf^2 and Pf > 0 at seeded random chart points."""
    rng = np.random.default_rng(options.seed)
    started = time.perf_counter()
    worst = 0.0
    positive = True
    for _ in range(PFAFFIAN_POINTS):
        point = random_chart_point(options.n, rng)
        worst = max(worst, pfaffian_oracle_error(options.n, point))
        positive = positive and pfaffian_recursive(options.n, point) > 0
    return [
        numeric_case("det=Pf^2", worst, PFAFFIAN_TOLERANCE, started),
        flag_case("Pf>0", positive, started),
    ]


# ============================================================================
# Registry and runner
# ============================================================================

SUITES: Dict[str, SuiteFn] = {
    "confluence": suite_confluence,
    "jacobi": suite_jacobi,
    "poisson-map": suite_poisson_map,
    "constraint": suite_constraint,
    "semiclassical": suite_semiclassical,
    "relations": suite_relations,
    "lowering": suite_lowering,
    "gram": suite_gram,
    "lemma": suite_lemma,
    "defect": suite_defect,
    "idempotency": suite_idempotency,
    "traces": suite_traces,
    "pairings": suite_pairings,
    "pfaffian": suite_pfaffian,
}


def run_suite(name: str, options: SuiteOptions) -> VerificationReport:
    """
    Run one suite.

    Raises:
        ValueError: If the suite name is unknown
    """
    if name not in SUITES:
        raise ValueError(f"Unknown suite '{name}'. Valid suites: {', '.join(SUITES)}")
    started = time.perf_counter()
    cases = SUITES[name](options)
    report = VerificationReport(suite=name, n=options.n, cases=cases)
    logger.info(
        f"Suite {name} (n={options.n}): {report.status}, {len(cases) - len(report.failures)}/{len(cases)} "
        f"cases passed in {time.perf_counter() - started:.2f}s"
    )
    return report


def run_suites(names: Sequence[str], options: SuiteOptions) -> VerificationReport:
    """
    Run several suites concurrently and merge their reports by case id.

    "all" expands to every registered suite. Parallelism is capped by settings.threads.
    """
    selected = list(SUITES) if "all" in names else list(names)
    if len(selected) == 1:
        return run_suite(selected[0], options)
    with ThreadPoolExecutor(max_workers=settings.threads) as pool:
        reports = list(pool.map(lambda name: run_suite(name, options), selected))
    return merge_reports("all" if "all" in names else "+".join(selected), reports)
