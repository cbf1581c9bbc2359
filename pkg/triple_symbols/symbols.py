"""
Triple symbols
Redei symbol (l = 2) and triple cubic residue symbol (l = 3) as Frobenius
tests in the residue field of p3, with the Milnor invariant, reciprocity
and permutation experiments built on top
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .config import RunConfig
from .eligibility import TripleContext, check_triple
from .errors import (
    AssumptionANotWitnessed,
    IneligibleTriple,
    InternalInvariantViolation,
    NotFoundWithinBound,
    PartialOrbit,
    ReciprocityNotTestable,
    ThetaNotUnitAtP3,
    TripleSymbolError,
)
from .norm_equations import (
    NormEquationSolution,
    SearchConfig,
    iter_solutions,
    solve,
    verify_solution,
)
from .residue import algebra_norm, legendre, zeta3_log, zeta3_power
from .theta import (
    ThetaData,
    swapped_theta_unit_at_p3,
    theta_of_solution,
    theta_unit_at_p3,
    x_unit_at_p3,
)

logger = logging.getLogger(__name__)

RENDERINGS = {
    2: ("+1", "-1"),
    3: ("1", "z3", "z3^-1"),
}


@dataclass(frozen=True)
class SymbolValue:
    """zeta_l^c, stored as the exponent c mod l"""
    ell: int
    c: int

    def __post_init__(self):
        object.__setattr__(self, "c", self.c % self.ell)

    @property
    def rendered(self) -> str:
        return RENDERINGS[self.ell][self.c]

    @classmethod
    def parse(cls, ell: int, rendered: str) -> SymbolValue:
        return cls(ell, RENDERINGS[ell].index(rendered))

    def __str__(self) -> str:
        return self.rendered


# ==================== Frobenius tests ====================

def redei_symbol(ctx: TripleContext, theta: ThetaData) -> SymbolValue:
    """Quadratic character of x + sqrt(p1)*y in F_p3, checked for both roots"""
    q = ctx.q3
    values = set()
    for image in theta.square_root_images(q):
        if image == 0:
            raise ThetaNotUnitAtP3(f"{theta} vanishes mod {q}")
        values.add(legendre(image, q))
    if len(values) != 1:
        raise InternalInvariantViolation(
            f"Square roots of {theta.p1} mod {q} disagree on {theta}")
    value = values.pop()
    return SymbolValue(2, 0 if value == 1 else 1)


def cubic_norm_test(ctx: TripleContext, theta: ThetaData, c: int) -> bool:
    """True iff N(theta^((q^2-1)/3) - zeta3^c) vanishes mod p3"""
    q = ctx.q3
    powered = theta.algebra_element(q) ** ((q * q - 1) // 3)
    return algebra_norm(powered - zeta3_power(c, q)) == 0


def triple_cubic_symbol(ctx: TripleContext, theta: ThetaData, literal_norm_check: bool = False) -> SymbolValue:
    """Unique c with theta^((q^2-1)/3) = zeta3^c in every component of the split algebra"""
    q = ctx.q3
    exponent = (q * q - 1) // 3
    logs = []
    for index, component in enumerate(theta.components(q)):
        if component.is_zero():
            raise ThetaNotUnitAtP3(f"{theta} vanishes in component {index} mod {q}")
        logs.append(zeta3_log(component ** exponent))
    logger.debug(f"[{ctx.p1},{ctx.p2},{ctx.p3}]_3 components: {logs}")
    if len(set(logs)) != 1:
        raise InternalInvariantViolation(f"Components disagree for {theta} mod {q}: {logs}")
    c = logs[0]

    if literal_norm_check:
        passing = [k for k in range(3) if cubic_norm_test(ctx, theta, k)]
        if passing != [c]:
            raise InternalInvariantViolation(
                f"Norm test passes for c in {passing}, component test gave {c}")
    return SymbolValue(3, c)


def milnor_invariant(sym: SymbolValue) -> int:
    return sym.c


# ==================== Pipeline ====================

@dataclass
class SymbolResult:
    """One evaluated symbol with everything it was computed from"""
    ctx: TripleContext
    solution: NormEquationSolution
    theta: ThetaData
    symbol: SymbolValue
    retries: int = 0

    @property
    def mu(self) -> int:
        return milnor_invariant(self.symbol)


def evaluate_symbol(ctx: TripleContext, sol: NormEquationSolution, literal_norm_check: bool = False) -> SymbolValue:
    if not verify_solution(sol, ctx.p1, ctx.p2):
        raise InternalInvariantViolation(f"{sol} does not solve the norm equation for ({ctx.p1},{ctx.p2})")
    theta = theta_of_solution(sol, ctx.p1)
    if ctx.ell == 2:
        return redei_symbol(ctx, theta)
    return triple_cubic_symbol(ctx, theta, literal_norm_check)


def solution_candidates(ctx: TripleContext, cfg: RunConfig) -> Iterator[NormEquationSolution]:
    """Solutions in scan order within search_bound, then the new ones up to enumeration_bound"""
    bounds = [cfg.search_bound]
    if cfg.enumeration_bound > cfg.search_bound:
        bounds.append(cfg.enumeration_bound)
    seen = set()
    for bound in bounds:
        for sol in iter_solutions(ctx.p1, ctx.p2, SearchConfig(bound), ell=ctx.ell):
            if sol not in seen:
                seen.add(sol)
                yield sol


def rank_candidates(candidates: Iterable[NormEquationSolution], q: int) -> Iterator[NormEquationSolution]:
    """
    Candidates with theta a unit at p3, best first.

    Solutions prime to p3 come in scan order as they are found. Those with
    p3 | y follow (no li_2(1 - z)), then those with p3 | x (no polylog
    values at all). Solutions with p3 | w are dropped.
    """
    no_swapped, no_polylog = [], []
    for sol in candidates:
        if not theta_unit_at_p3(sol, q):
            logger.debug(f"Skipping {sol}: {q} divides w")
        elif not x_unit_at_p3(sol, q):
            no_polylog.append(sol)
        elif not swapped_theta_unit_at_p3(sol, q):
            no_swapped.append(sol)
        else:
            yield sol
    yield from no_swapped
    yield from no_polylog


def compute_symbol(
    ell: int,
    p1: int,
    p2: int,
    p3: int,
    cfg: Optional[RunConfig] = None,
    solution: Optional[NormEquationSolution] = None,
) -> SymbolResult:
    """
    Eligibility, norm equation, symbol.

    Without an explicit solution, candidates come from solution_candidates
    in the order of rank_candidates. A ThetaNotUnitAtP3 from the symbol
    itself moves on to the next candidate, up to `retry_limit` times.
    """
    cfg = cfg or RunConfig()
    ctx = check_triple(ell, p1, p2, p3)
    if solution is not None:
        if not theta_unit_at_p3(solution, ctx.q3):
            raise ThetaNotUnitAtP3(f"{ctx.q3} divides w of {solution}")
        candidates: Iterable[NormEquationSolution] = [solution]
    else:
        candidates = rank_candidates(solution_candidates(ctx, cfg), ctx.q3)

    last_error: Optional[ThetaNotUnitAtP3] = None
    retries = 0
    for sol in candidates:
        try:
            symbol = evaluate_symbol(ctx, sol, cfg.literal_norm_check)
        except ThetaNotUnitAtP3 as exc:
            logger.warning(f"Retrying ({ctx.p1},{ctx.p2},{ctx.p3}) after {sol}: {exc}")
            last_error = exc
            retries += 1
            if retries > cfg.retry_limit:
                break
            continue
        if not (x_unit_at_p3(sol, ctx.q3) and swapped_theta_unit_at_p3(sol, ctx.q3)):
            logger.warning(f"({ctx.p1},{ctx.p2},{ctx.p3}): {sol} is not prime to {ctx.q3}, polylog values are partial")
        return SymbolResult(ctx, sol, theta_of_solution(sol, ctx.p1), symbol, retries)

    if last_error is not None:
        raise last_error
    # the solver raises its own not-found error when there is no solution at all
    solve(ell, ctx.p1, ctx.p2, SearchConfig(cfg.search_bound))
    raise ThetaNotUnitAtP3(
        f"Every solution for ({ctx.p1},{ctx.p2}) up to {max(cfg.search_bound, cfg.enumeration_bound)} "
        f"has {ctx.q3} | w")


# ==================== Experiments ====================

@dataclass
class ReciprocityReport:
    forward: SymbolValue
    backward: SymbolValue

    @property
    def product_is_identity(self) -> bool:
        return (self.forward.c + self.backward.c) % self.forward.ell == 0

    def to_dict(self) -> dict:
        return {
            "forward": self.forward.rendered,
            "backward": self.backward.rendered,
            "product_is_identity": self.product_is_identity,
        }


def reciprocity_check(ell: int, p1: int, p2: int, p3: int, cfg: Optional[RunConfig] = None) -> ReciprocityReport:
    """[p1,p2,p3] * [p2,p1,p3] = 1"""
    try:
        forward = compute_symbol(ell, p1, p2, p3, cfg).symbol
        backward = compute_symbol(ell, p2, p1, p3, cfg).symbol
    except (AssumptionANotWitnessed, NotFoundWithinBound) as exc:
        raise ReciprocityNotTestable(f"({p1},{p2},{p3}): {exc}") from exc
    report = ReciprocityReport(forward, backward)
    if not report.product_is_identity:
        logger.warning(f"Reciprocity fails for ({p1},{p2},{p3}): {forward} * {backward}")
    return report


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


@dataclass
class PermutationReport:
    """Symbols of all six orderings, keyed by the ordered triple"""
    ell: int
    base: Tuple[int, int, int]
    values: Dict[Tuple[int, int, int], SymbolValue] = field(default_factory=dict)
    signs: Dict[Tuple[int, int, int], int] = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        """c_rho = sgn(rho) * c_id mod l for every ordering"""
        identity = self.values[self.base].c
        return all(
            (value.c - self.signs[order] * identity) % self.ell == 0
            for order, value in self.values.items()
        )

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "triple": list(self.base),
            "rows": [
                {"order": list(order), "sign": self.signs[order], "symbol": value.rendered}
                for order, value in self.values.items()
            ],
            "verdict": self.verdict,
        }


def permutation_experiment(ell: int, triple: Sequence[int], cfg: Optional[RunConfig] = None) -> PermutationReport:
    base = tuple(triple)
    report = PermutationReport(ell=ell, base=base)
    missing: List[str] = []

    for perm in permutations(range(3)):
        order = tuple(base[i] for i in perm)
        try:
            result = compute_symbol(ell, *order, cfg)
        except (IneligibleTriple, InternalInvariantViolation):
            raise
        except TripleSymbolError as exc:
            missing.append(f"{order}: {exc.error_name}")
            continue
        report.values[order] = result.symbol
        report.signs[order] = permutation_sign(perm)

    if missing:
        available = {str(order): value.rendered for order, value in report.values.items()}
        raise PartialOrbit(f"No symbol for {len(missing)} orderings: {'; '.join(missing)}", available)
    logger.info(f"Permutation experiment {base}: verdict {report.verdict}")
    return report
