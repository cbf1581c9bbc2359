"""
Mod-l Galois polylogarithms
The parameter z = p1*(-y/x)^l of a norm equation solution, the mod-l values
of chi_2 and li_2 at the Frobenius of p3, and the functional equation
li_2(z) + li_2(1 - z) at that Frobenius.

chi_2 is evaluated as the l-th power residue character of theta / x^(l(l-1)/2)
without going through the symbols module, so agreement with the symbol is a
real cross-check.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .eligibility import TripleContext
from .errors import (
    DegenerateZ,
    InternalInvariantViolation,
    RhoUndefined,
    ThetaNotUnitAtP3,
)
from .norm_equations import NormEquationSolution
from .residue import (
    CubicAlgebraElem,
    algebra_components,
    algebra_norm,
    legendre,
    sqrt_mod,
    zeta3_log,
)
from .theta import ThetaData, swapped_theta, theta_of_solution

logger = logging.getLogger(__name__)


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


@dataclass(frozen=True)
class RationalParameter:
    z: Fraction
    one_minus_z: Fraction

    def __str__(self) -> str:
        return format_fraction(self.z)


@dataclass(frozen=True)
class PolylogValue:
    ell: int
    li2_mod_ell: int
    chi2_mod_ell: int
    rho_x: Optional[int] = None

    @property
    def mu(self) -> int:
        """Milnor invariant predicted from li_2 (and rho_x for l = 2)"""
        if self.ell == 2:
            return (self.rho_x - self.li2_mod_ell) % 2
        return (-self.li2_mod_ell) % 3


def signed_residue(value: int, ell: int) -> int:
    """Representative in {-1, 0, 1} as printed in the tables"""
    value %= ell
    return value - ell if value > ell // 2 else value


def z_of_solution(sol: NormEquationSolution, p1: int, p2: Optional[int] = None) -> RationalParameter:
    """z = p1*(-y/x)^l, with 1 - z cross-checked against w^l*p2/x^l when p2 is given"""
    if sol.x == 0:
        raise DegenerateZ(f"x = 0 in {sol}")
    ell = sol.ell
    z = p1 * Fraction(-sol.y, sol.x) ** ell
    if z in (0, 1):
        raise DegenerateZ(f"z = {z} for {sol}")
    one_minus_z = 1 - z
    if p2 is not None and one_minus_z != Fraction(sol.w ** ell * p2, sol.x ** ell):
        raise InternalInvariantViolation(f"1 - z = {one_minus_z} disagrees with w^l*p2/x^l for {sol}")
    return RationalParameter(z, one_minus_z)


def rho_x(sol: NormEquationSolution, p3: int) -> int:
    """0 if x is a square mod p3, else 1"""
    q = abs(p3)
    value = legendre(sol.x, q)
    if value == 0:
        raise RhoUndefined(f"x = {sol.x} is divisible by {q}")
    return 0 if value == 1 else 1


def _kummer_character(theta: ThetaData, x: int, q: int) -> int:
    """l-th power residue character of theta * x^(-l(l-1)/2) at the residue field of q"""
    if x % q == 0:
        raise ThetaNotUnitAtP3(f"x = {x} vanishes mod {q}")

    if theta.ell == 2:
        x_inverse = pow(x, -1, q)
        values = set()
        for s in sqrt_mod(theta.p1, q):
            image = (theta.x + s * theta.y) * x_inverse % q
            if image == 0:
                raise ThetaNotUnitAtP3(f"{theta} vanishes mod {q}")
            values.add(legendre(image, q))
        if len(values) != 1:
            raise InternalInvariantViolation(f"Square roots of {theta.p1} mod {q} disagree on {theta}")
        return 0 if values.pop() == 1 else 1

    element = theta.algebra_element(q)
    if algebra_norm(element) == 0:
        raise ThetaNotUnitAtP3(f"{theta} is not a unit mod {q}")
    scaled = element * CubicAlgebraElem.constant(pow(x, -3, q), theta.p1, q)
    # exponentiate in the algebra first, split afterwards
    powered = scaled ** ((q * q - 1) // 3)
    logs = {zeta3_log(component) for component in algebra_components(powered)}
    if len(logs) != 1:
        raise InternalInvariantViolation(f"Kummer character of {theta} mod {q} is not central: {logs}")
    return logs.pop()


def chi2_mod_l(ctx: TripleContext, sol: NormEquationSolution) -> int:
    z_of_solution(sol, ctx.p1)
    return _kummer_character(theta_of_solution(sol, ctx.p1), sol.x, ctx.q3)


def li2_mod_l(ctx: TripleContext, sol: NormEquationSolution) -> PolylogValue:
    """li_2(z) = -chi_2(z) mod l at the Frobenius of p3"""
    chi2 = chi2_mod_l(ctx, sol)
    li2 = (-chi2) % ctx.ell
    rho = rho_x(sol, ctx.p3) if ctx.ell == 2 else None
    value = PolylogValue(ell=ctx.ell, li2_mod_ell=li2, chi2_mod_ell=chi2, rho_x=rho)
    logger.debug(f"({ctx.p1},{ctx.p2},{ctx.p3}) {sol}: chi2={chi2} li2={li2} rho_x={rho}")
    return value


def li2_one_minus_z(ctx: TripleContext, sol: NormEquationSolution) -> int:
    """li_2(1 - z) from the theta of the swapped pair (p2, p1)"""
    z_of_solution(sol, ctx.p1, ctx.p2)
    chi2 = _kummer_character(swapped_theta(sol, ctx.p1, ctx.p2), sol.x, ctx.q3)
    return (-chi2) % ctx.ell


@dataclass(frozen=True)
class FunctionalEquationReport:
    ell: int
    li2_z: int
    li2_one_minus_z: int
    expected: int

    @property
    def observed(self) -> int:
        return (self.li2_z + self.li2_one_minus_z) % self.ell

    @property
    def holds(self) -> bool:
        return self.observed == self.expected

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {
            "li2_z": signed_residue(self.li2_z, self.ell),
            "li2_one_minus_z": signed_residue(self.li2_one_minus_z, self.ell),
            "expected": self.expected,
            "observed": self.observed,
            "holds": self.holds,
        }


def functional_equation_correction(ctx: TripleContext) -> int:
    """(chi^2 - 1)/24 mod l with chi the norm of p3"""
    norm = ctx.q3 ** 2 if ctx.ell == 3 else ctx.q3
    return ((norm * norm - 1) // 24) % ctx.ell


def functional_equation_check(ctx: TripleContext, sol: NormEquationSolution) -> FunctionalEquationReport:
    """li_2(z) + li_2(1 - z) against the Frobenius value of the constant term"""
    z_of_solution(sol, ctx.p1, ctx.p2)
    report = FunctionalEquationReport(
        ell=ctx.ell,
        li2_z=li2_mod_l(ctx, sol).li2_mod_ell,
        li2_one_minus_z=li2_one_minus_z(ctx, sol),
        expected=functional_equation_correction(ctx),
    )
    if not report.holds:
        logger.warning(f"Functional equation fails for ({ctx.p1},{ctx.p2},{ctx.p3}) {sol}: {report.to_dict()}")
    return report
