"""
The suspension map from a product of spheres onto the even sphere, and exact
checks of the classical Poisson geometry.

The map sends the product coordinates (alpha_i, tau_i) to

    a_i = alpha_i * prod_{k<i} tau_k^(1/2) * prod_{k>i} tau_k,    t = prod_k tau_k

so phi_pushforward is a monomial substitution with half-step tau exponents.
"""

import logging
from itertools import combinations, combinations_with_replacement
from typing import List, Tuple

from src.exceptions import PresetMismatchError
from src.models.certificates import ResidualEntry, ResidualTable
from src.poisson.classical import ClassicalPoly, Monomial
from src.poisson.structures import (
    PoissonStructure,
    bracket,
    even_sphere_coinduced,
    product_podles,
)

logger = logging.getLogger(__name__)


def _entry(label: str, residual: ClassicalPoly) -> ResidualEntry:
    return ResidualEntry(label=label, residual=str(residual), terms=len(residual))


def suspension_images(n: int) -> List[Monomial]:
    """
    Image of every even-sphere coordinate (t, a1*, a1, ...) as a product-sphere monomial.

    Exponents are in half-steps over the ring (tau1, alpha1*, alpha1, tau2, ...).
    """
    product = product_podles(n)
    size = product.ring.size
    images: List[Monomial] = []

    t_image = [0] * size
    for k in range(n):
        t_image[3 * k] = 2
    images.append(tuple(t_image))

    for i in range(1, n + 1):
        taus = [0] * size
        for k in range(1, n + 1):
            if k < i:
                taus[3 * (k - 1)] = 1
            elif k > i:
                taus[3 * (k - 1)] = 2
        for offset in (1, 2):  # alpha_i*, alpha_i
            image = list(taus)
            image[3 * (i - 1) + offset] = 2
            images.append(tuple(image))
    return images


def phi_pushforward(f: ClassicalPoly) -> ClassicalPoly:
    """
    Pull a polynomial on the even sphere back to the product of spheres.

    Args:
        f: Polynomial over EvenSphereCoinduced(n)

    Returns:
        Image over ProductPodles(n) (not reduced)

    Raises:
        PresetMismatchError: If f is not over an even-sphere ring

    Example:
        >>> P = even_sphere_coinduced(2)
        >>> str(phi_pushforward(P.variable("a2")))
        'tau1^(1/2) * alpha2'
    """
    n = (f.ring.size - 1) // 2
    if n < 1 or f.ring != even_sphere_coinduced(n).ring:
        raise PresetMismatchError(f"phi_pushforward expects an even-sphere polynomial, got {f.ring.label}")
    return f.substitute_monomials(product_podles(n).ring, suspension_images(n))


def verify_poisson_map(n: int) -> ResidualTable:
    """
    Check that the suspension map is Poisson on every generator pair.

    For each unordered pair (u, v) of coordinates (repetition included), the
    residual is {phi u, phi v}_product - phi({u, v}_sphere), reduced modulo the
    product-sphere relations.

    Args:
        n: Sphere dimension parameter (>= 1)

    Returns:
        ResidualTable with one entry per pair; all residuals vanish
    """
    sphere = even_sphere_coinduced(n)
    product = product_podles(n)
    generators = sphere.generators()
    names = sphere.ring.variables
    table = ResidualTable(check="poisson-map")
    for i, j in combinations_with_replacement(range(len(generators)), 2):
        u, v = generators[i], generators[j]
        lifted = bracket(phi_pushforward(u), phi_pushforward(v), product)
        pushed = product.reduce(phi_pushforward(bracket(u, v, sphere)))
        residual = product.reduce(lifted - pushed)
        table.entries.append(_entry(f"({names[i]}, {names[j]})", residual))
    logger.info(f"Poisson-map check n={n}: {len(table.nonzero())} nonzero of {len(table.entries)}")
    return table


def verify_sphere_constraint(n: int) -> ClassicalPoly:
    """
    phi(sum_i conj(a_i) a_i - t + t^2) reduced on the product of spheres; vanishes.
    """
    sphere = even_sphere_coinduced(n)
    product = product_podles(n)
    t = sphere.variable("t")
    modulus = sum(
        (sphere.variable(f"a{i}*") * sphere.variable(f"a{i}") for i in range(1, n + 1)),
        ClassicalPoly.zero(sphere.ring),
    )
    return product.reduce(phi_pushforward(modulus - t + t * t))


def check_jacobi(P: PoissonStructure) -> ResidualTable:
    """
    Jacobi cyclic sum {u,{v,w}} + {v,{w,u}} + {w,{u,v}} on every triple of distinct generators.

    Triples with a repeated generator vanish by antisymmetry alone and are skipped.
    """
    generators = P.generators()
    names = P.ring.variables
    table = ResidualTable(check=f"jacobi:{P.label}")
    for i, j, k in combinations(range(len(generators)), 3):
        u, v, w = generators[i], generators[j], generators[k]
        cyclic = (
            bracket(u, bracket(v, w, P), P)
            + bracket(v, bracket(w, u, P), P)
            + bracket(w, bracket(u, v, P), P)
        )
        table.entries.append(_entry(f"({names[i]}, {names[j]}, {names[k]})", P.reduce(cyclic)))
    logger.info(f"Jacobi check {P.label}: max residual terms {table.max_terms}")
    return table


def is_casimir_ideal(P: PoissonStructure) -> bool:
    """
    True if the bracket of every generator with every relation reduces to zero,
    i.e. the relation ideal is a Poisson ideal and the reduced bracket is well defined.
    """
    for relation in P.relations:
        for generator in P.generators():
            if not bracket(generator, relation, P).is_zero():
                logger.debug(f"{P.label}: bracket with relation {relation} does not reduce to 0")
                return False
    return True


def north_pole_degeneracy(n: int) -> float:
    """
    Largest |{u, v}| over coordinate pairs of the even sphere at the north pole a_i = 0, t = 0.

    The north pole is a zero-dimensional symplectic leaf, so the result is 0.
    """
    sphere = even_sphere_coinduced(n)
    origin = [0j] * sphere.ring.size
    largest = 0.0
    generators = sphere.generators()
    for u, v in combinations(generators, 2):
        largest = max(largest, abs(bracket(u, v, sphere).evaluate(origin)))
    return largest


def generator_pairs(n: int) -> List[Tuple[str, str]]:
    """Unordered coordinate pairs (with repetition) of the even sphere, in ring order."""
    names = even_sphere_coinduced(n).ring.variables
    return list(combinations_with_replacement(names, 2))
