"""
Theta elements
theta built from a norm equation solution, its swapped-pair counterpart and
its residue images at p3. Shared by the symbol and the polylog routes.
"""
from dataclasses import dataclass
from typing import List, Tuple

from .eisenstein import OMEGA, OMEGA_SQUARED
from .errors import DegenerateTheta
from .norm_equations import NormEquationSolution
from .residue import CubicAlgebraElem, FpOmegaElem, algebra_components, sqrt_mod


@dataclass(frozen=True)
class ThetaData:
    """
    theta = x + y*sqrt(p1) for l = 2, or
    theta = (x + w*y*cbrt(p1)) * (x + w^2*y*cbrt(p1))^2 for l = 3.

    Kept symbolic; residue images are built on demand for a given q.
    """
    ell: int
    x: int
    y: int
    p1: int

    def square_root_images(self, q: int) -> List[int]:
        """x + s*y mod q for both square roots s of p1 (l = 2)"""
        return [(self.x + s * self.y) % q for s in sqrt_mod(self.p1, q)]

    def algebra_element(self, q: int) -> CubicAlgebraElem:
        """theta in F_q[w][t]/(t^3 - p1) (l = 3)"""
        first = CubicAlgebraElem.linear(self.x, OMEGA * self.y, self.p1, q)
        second = CubicAlgebraElem.linear(self.x, OMEGA_SQUARED * self.y, self.p1, q)
        return first * second * second

    def components(self, q: int) -> Tuple[FpOmegaElem, ...]:
        """theta evaluated at each of the three cube roots of p1 (l = 3)"""
        omega = FpOmegaElem.omega(q)
        images = []
        for root in algebra_components(CubicAlgebraElem.t(self.p1, q)):
            first = FpOmegaElem.of(self.x, q) + omega * root * self.y
            second = FpOmegaElem.of(self.x, q) + omega * omega * root * self.y
            images.append(first * second * second)
        return tuple(images)

    def __str__(self) -> str:
        radical = "sqrt" if self.ell == 2 else "cbrt"
        return f"theta({self.x}, {self.y}*{radical}({self.p1}))"


def theta_of_solution(sol: NormEquationSolution, p1: int) -> ThetaData:
    if sol.y == 0:
        raise DegenerateTheta(f"y = 0 in {sol}: theta is rational")
    return ThetaData(ell=sol.ell, x=sol.x, y=sol.y, p1=p1)


def swapped_theta(sol: NormEquationSolution, p1: int, p2: int) -> ThetaData:
    """theta of the swapped pair (p2, p1) built from (x, -w), with the radical of p2"""
    if sol.w == 0:
        raise DegenerateTheta(f"w = 0 in {sol}: swapped theta is rational")
    return ThetaData(ell=sol.ell, x=sol.x, y=-sol.w, p1=p2)


def theta_unit_at_p3(sol: NormEquationSolution, q: int) -> bool:
    """N(theta) is a power of p2*w^l, so theta is a unit at p3 iff q does not divide w"""
    return sol.w % q != 0


def swapped_theta_unit_at_p3(sol: NormEquationSolution, q: int) -> bool:
    """N(swapped theta) is a power of p1*y^l"""
    return sol.y % q != 0


def x_unit_at_p3(sol: NormEquationSolution, q: int) -> bool:
    return sol.x % q != 0
