"""
Norm equations
Bounded exhaustive solvers for x^2 - p1*y^2 - p2*w^2 = 0 (l = 2, with the
Redei normalization) and x^3 + p1*y^3 = p2*w^3 (l = 3, assumption (A))
"""
import logging
from dataclasses import dataclass
from itertools import islice
from math import gcd
from typing import Iterator, List, Optional

import gmpy2

from .eligibility import check_pair
from .errors import (
    AssumptionANotWitnessed,
    InputsEqual,
    InvalidConfig,
    NotFoundWithinBound,
)

logger = logging.getLogger(__name__)

SIGNS = (1, -1)


@dataclass(frozen=True)
class NormEquationSolution:
    """Integer triple (x, y, w) for the pair equation of the given l"""
    ell: int
    x: int
    y: int
    w: int

    def as_tuple(self):
        return (self.x, self.y, self.w)

    def __str__(self) -> str:
        return f"({self.x},{self.y},{self.w})"


@dataclass(frozen=True)
class SearchConfig:
    """Scan limits; bound caps |y| and the other scanned coordinate"""
    bound: int = 100
    allow_rational: bool = False

    def __post_init__(self):
        if self.bound < 0:
            raise InvalidConfig(f"bound must be non-negative, got {self.bound}")


def exact_root(n: int, k: int) -> Optional[int]:
    """Integer k-th root of n if n is a perfect k-th power (sign-aware for odd k)"""
    if n < 0:
        if k % 2 == 0:
            return None
        root = exact_root(-n, k)
        return None if root is None else -root
    root, exact = gmpy2.iroot(gmpy2.mpz(n), k)
    if not exact:
        return None
    root = int(root)
    # re-multiply: never trust a root without the exact check
    return root if root ** k == n else None


def _require_distinct(p1: int, p2: int):
    if p1 == p2:
        raise InputsEqual(f"InputsEqual: p1 = p2 = {p1}")


def _scan_l2(p1: int, p2: int, bound: int) -> Iterator[NormEquationSolution]:
    """Normalized primitive solutions in scan order: |y|, |w|, sign of y, sign of w"""
    for ay in range(0, bound + 1):
        for aw in range(0, bound + 1):
            for sy in SIGNS[: 1 if ay == 0 else 2]:
                for sw in SIGNS[: 1 if aw == 0 else 2]:
                    y, w = sy * ay, sw * aw
                    ax = exact_root(p1 * y * y + p2 * w * w, 2)
                    if not ax:
                        continue
                    if y % 2 != 0 or gcd(ax, y, w) != 1:
                        logger.debug(f"l=2 ({p1},{p2}): raw ({ax},{y},{w}) fails the parity/gcd clauses")
                        continue
                    # exactly one of +-x meets x - y = 1 mod 4 once y is even and x odd
                    for x in (ax, -ax):
                        if (x - y) % 4 == 1:
                            yield NormEquationSolution(2, x, y, w)
                            break


def _scan_l3(p1: int, p2: int, bound: int) -> Iterator[NormEquationSolution]:
    """Primitive solutions in scan order: |y|, |x|, sign of y, sign of x"""
    for ay in range(1, bound + 1):
        for ax in range(1, bound + 1):
            if gcd(ax, ay) != 1:
                continue
            for sy in SIGNS:
                for sx in SIGNS:
                    x, y = sx * ax, sy * ay
                    n = x ** 3 + p1 * y ** 3
                    if n % p2:
                        continue
                    w = exact_root(n // p2, 3)
                    if w:
                        yield NormEquationSolution(3, x, y, w)


def solve_l2(p1: int, p2: int, cfg: SearchConfig) -> NormEquationSolution:
    """First normalized solution of x^2 = p1*y^2 + p2*w^2 in scan order"""
    _require_distinct(p1, p2)
    check_pair(2, p1, p2)
    for sol in _scan_l2(p1, p2, cfg.bound):
        logger.debug(f"l=2 ({p1},{p2}) -> {sol}")
        return sol
    raise NotFoundWithinBound(f"No normalized solution for ({p1},{p2}) with |y|,|w| <= {cfg.bound}")


def solve_l3_assumption_a(p1: int, p2: int, cfg: SearchConfig) -> NormEquationSolution:
    """First solution of x^3 + p1*y^3 = p2*w^3 with gcd(x, y) = 1 in scan order"""
    _require_distinct(p1, p2)
    if cfg.allow_rational:
        raise NotImplementedError("Rational (x, y) search is not supported")
    ctx = check_pair(3, p1, p2)
    for sol in _scan_l3(ctx.p1, ctx.p2, cfg.bound):
        logger.debug(f"l=3 ({ctx.p1},{ctx.p2}) -> {sol}")
        return sol
    raise AssumptionANotWitnessed(
        f"No alpha = x + y*cbrt({ctx.p1}) for ({ctx.p1},{ctx.p2}) with |x|,|y| <= {cfg.bound}")


def verify_solution(sol: NormEquationSolution, p1: int, p2: int) -> bool:
    """Exact re-check of x^l - (-y)^l p1 = w^l p2 and the normalization clauses"""
    ell, x, y, w = sol.ell, sol.x, sol.y, sol.w
    if x == 0 or w == 0:
        return False
    if x ** ell - (-y) ** ell * p1 != w ** ell * p2:
        return False
    if ell == 2:
        return gcd(x, y, w) == 1 and y % 2 == 0 and (x - y) % 4 == 1
    if ell == 3:
        return gcd(x, y) == 1
    return False


def iter_solutions(
    p1: int,
    p2: int,
    cfg: SearchConfig,
    ell: Optional[int] = None,
) -> Iterator[NormEquationSolution]:
    """
    Solutions in scan order, lazily.

    The equation is chosen by `ell`; when omitted, negative (normalized
    cubic) primes select l = 3 and positive ones l = 2.
    """
    _require_distinct(p1, p2)
    if ell is None:
        ell = 3 if p1 < 0 else 2
    ctx = check_pair(ell, p1, p2)
    scan = _scan_l3 if ell == 3 else _scan_l2
    return scan(ctx.p1, ctx.p2, cfg.bound)


def enumerate_solutions(
    p1: int,
    p2: int,
    cfg: SearchConfig,
    limit: Optional[int] = None,
    ell: Optional[int] = None,
) -> List[NormEquationSolution]:
    """Up to `limit` distinct solutions in scan order (all of them when limit is None)"""
    solutions = list(islice(iter_solutions(p1, p2, cfg, ell), limit))
    logger.debug(f"Enumerated {len(solutions)} solutions for ({p1},{p2})")
    return solutions


def solve(ell: int, p1: int, p2: int, cfg: SearchConfig) -> NormEquationSolution:
    if ell == 2:
        return solve_l2(p1, p2, cfg)
    return solve_l3_assumption_a(p1, p2, cfg)
