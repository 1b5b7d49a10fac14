"""
The 1-summable even Fredholm module (H, pi, F) on two copies of the Fock space.

H = H+ (+) H-, pi = sigma_n (+) eps acting diagonally, F the flip between the two
copies and gamma = diag(1, -1) the grading. Its character

    1/2 Tr(gamma F [F, pi(f)]) = Tr(sigma_n(f) - eps(f))

is the character trace computed in representation.py; here it is evaluated from
the block operators directly.
"""

import logging
import math

import scipy.sparse as sps

from src.exceptions import PresetMismatchError
from src.fockrep.representation import get_representation
from src.ncalg import NCPoly, epsilon, even_sphere
from src.scalars import laurent_eval

logger = logging.getLogger(__name__)


class FredholmModule:
    """
    Truncated Fredholm module of the even sphere.

    Attributes:
        n: Dimension parameter of the sphere
        q0: Deformation parameter in (0, 1)
        N: Levels per tensor factor
    """

    def __init__(self, n: int, q0: float, N: int):
        self.n = n
        self.q0 = float(q0)
        self.N = N
        self.preset = even_sphere(n)
        self._rep = get_representation(self.preset, self.q0, N)
        dim = self._rep.space.dim
        identity = sps.identity(dim, format="csr")
        self.flip = sps.bmat([[None, identity], [identity, None]], format="csr")
        self.grading = sps.bmat([[identity, None], [None, -identity]], format="csr")

    @property
    def dim(self) -> int:
        return 2 * self._rep.space.dim

    def pi(self, f: NCPoly) -> sps.csr_matrix:
        """pi(f) = sigma_n(f) (+) eps(f) as a block-diagonal operator on H."""
        if f.preset is not self.preset:
            raise PresetMismatchError(f"Polynomial over {f.preset.label} used with {self.preset.label}")
        dim = self._rep.space.dim
        scalar = float(laurent_eval(epsilon(f), self.q0))
        counit = scalar * sps.identity(dim, format="csr")
        return sps.bmat([[self._rep.represent(f).matrix, None], [None, counit]], format="csr")

    def commutator(self, f: NCPoly) -> sps.csr_matrix:
        """[F, pi(f)]; off-diagonal with blocks +-(eps(f) - sigma_n(f))."""
        represented = self.pi(f)
        return sps.csr_matrix(self.flip @ represented - represented @ self.flip)

    def character(self, f: NCPoly) -> float:
        """
        1/2 Tr(gamma F [F, pi(f)]) on the truncation.

        Example:
            >>> module = FredholmModule(1, 0.5, 40)
            >>> round(module.character(NCPoly.generator(module.preset, "t")), 12)
            1.333333333333
        """
        product = self.grading @ self.flip @ self.commutator(f)
        value = 0.5 * math.fsum(product.diagonal())
        logger.debug(f"Fredholm character of {f} on n={self.n}, N={self.N}: {value:.12g}")
        return value
