"""
Command implementations shared by the CLI and the tool registry.

Single-triple commands raise TripleSymbolError subclasses; batch commands
record failures per row in ReportRow.status instead.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, repeat
from math import gcd
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from .config import RunConfig
from .eisenstein import enumerate_prime_list, is_prime
from .eligibility import check_pair, is_eligible
from .errors import (
    InternalInvariantViolation,
    TripleSymbolError,
    exit_code_for,
)
from .norm_equations import (
    NormEquationSolution,
    SearchConfig,
    enumerate_solutions,
    solve,
    verify_solution,
)
from .polylog import (
    FunctionalEquationReport,
    format_fraction,
    functional_equation_correction,
    li2_mod_l,
    li2_one_minus_z,
    signed_residue,
    z_of_solution,
)
from .report import ReportRow
from .symbols import compute_symbol, permutation_experiment
from .tables import TABLE1_PAIR, TABLE2_ROWS, Table2Row, table1_primes
from .theta import swapped_theta_unit_at_p3, x_unit_at_p3

logger = logging.getLogger(__name__)

# statuses reported by verify that are not failures; ThetaNotUnitAtP3 only
# escapes compute_symbol once every solution within the bounds has p3 | w
NOT_TESTABLE = {
    "ReciprocityNotTestable",
    "AssumptionANotWitnessed",
    "NotFoundWithinBound",
    "ThetaNotUnitAtP3",
}


# ==================== Single triple ====================

def cmd_symbol(
    ell: int,
    p1: int,
    p2: int,
    p3: int,
    cfg: RunConfig,
    solution: Optional[NormEquationSolution] = None,
) -> ReportRow:
    """
    Eligibility, norm equation, symbol and polylog values for one triple.

    li2(z) needs x prime to p3 and li2(1-z) also y; the fields stay empty
    when the only usable solution misses either.
    """
    result = compute_symbol(ell, p1, p2, p3, cfg, solution=solution)
    ctx, sol = result.ctx, result.solution
    row = ReportRow(
        ell=ell,
        p1=ctx.p1,
        p2=ctx.p2,
        p3=ctx.p3,
        solution=sol.as_tuple(),
        z=format_fraction(z_of_solution(sol, ctx.p1, ctx.p2).z),
        symbol_exponent=result.symbol.c,
        symbol_rendered=result.symbol.rendered,
        mu=result.mu,
    )

    if not x_unit_at_p3(sol, ctx.q3):
        logger.info(f"li2 undefined for {sol}: {ctx.q3} divides x")
        return row
    polylog = li2_mod_l(ctx, sol)
    if polylog.mu != result.mu:
        raise InternalInvariantViolation(
            f"Symbol route gives mu={result.mu}, polylog route gives mu={polylog.mu} for {sol}")
    row.li2_z = signed_residue(polylog.li2_mod_ell, ell)

    if not swapped_theta_unit_at_p3(sol, ctx.q3):
        logger.info(f"li2(1-z) undefined for {sol}: {ctx.q3} divides y")
        return row
    functional = FunctionalEquationReport(
        ell=ell,
        li2_z=polylog.li2_mod_ell,
        li2_one_minus_z=li2_one_minus_z(ctx, sol),
        expected=functional_equation_correction(ctx),
    )
    if not functional.holds:
        raise InternalInvariantViolation(f"Functional equation fails: {functional.to_dict()}")
    row.li2_one_minus_z = signed_residue(functional.li2_one_minus_z, ell)
    return row


def cmd_solve(ell: int, p1: int, p2: int, cfg: RunConfig, limit: Optional[int] = None) -> Dict:
    search = SearchConfig(cfg.search_bound)
    if limit:
        solutions = enumerate_solutions(p1, p2, search, limit=limit, ell=ell)
    else:
        solutions = [solve(ell, p1, p2, search)]
    ctx = check_pair(ell, p1, p2)
    pair = (ctx.p1, ctx.p2)
    return {
        "ell": ell,
        "p1": pair[0],
        "p2": pair[1],
        "solutions": [list(sol.as_tuple()) for sol in solutions],
        "verified": all(verify_solution(sol, *pair) for sol in solutions),
    }


def cmd_primes(bound: int) -> List[Dict]:
    return [{"p": np.p, "q": np.q} for np in enumerate_prime_list(bound)]


def cmd_conjecture(ell: int, triple: Sequence[int], cfg: RunConfig) -> Dict:
    return permutation_experiment(ell, triple, cfg).to_dict()


# ==================== Batch drivers ====================

def _error_row(ell: int, p1: int, p2: int, p3: int, exc: TripleSymbolError) -> ReportRow:
    logger.warning(f"Row ({p1},{p2},{p3}) failed: {exc}")
    return ReportRow(ell=ell, p1=p1, p2=p2, p3=p3, status=exc.error_name)


def _run_rows(worker: Callable, items: Iterable, cfg: RunConfig) -> List[ReportRow]:
    """Evaluate rows in order; a process pool keeps the input order"""
    items = list(items)
    if cfg.parallelism > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            rows = list(pool.map(worker, items, repeat(cfg)))
    else:
        rows = [worker(item, cfg) for item in items]
    failed = sum(1 for row in rows if not row.ok)
    logger.info(f"Evaluated {len(rows)} rows, {failed} failed")
    return rows


def _table1_row(p3: int, cfg: RunConfig) -> ReportRow:
    p1, p2 = TABLE1_PAIR
    try:
        row = cmd_symbol(3, p1, p2, p3, cfg)
        row.symbol_backward_rendered = compute_symbol(3, p2, p1, p3, cfg).symbol.rendered
    except TripleSymbolError as exc:
        return _error_row(3, p1, p2, p3, exc)
    return row


def cmd_table1(cfg: RunConfig) -> List[ReportRow]:
    return _run_rows(_table1_row, table1_primes(), cfg)


def table2_solution(row: Table2Row, cfg: RunConfig) -> NormEquationSolution:
    """The printed alpha in primitive form, located in the enumeration"""
    g = gcd(row.alpha_x, row.alpha_y)
    x, y = row.alpha_x // g, row.alpha_y // g
    solutions = enumerate_solutions(row.p1, row.p2, SearchConfig(cfg.search_bound), ell=3)
    for sol in solutions:
        if (sol.x, sol.y) == (x, y):
            return sol
    if not solutions:
        # raises AssumptionANotWitnessed
        solve(3, row.p1, row.p2, SearchConfig(cfg.search_bound))
    logger.warning(
        f"alpha = {row.alpha_x}+{row.alpha_y}*cbrt({row.p1}) does not solve the norm equation "
        f"for ({row.p1},{row.p2}); using {solutions[0]}")
    return solutions[0]


def _table2_row(row: Table2Row, cfg: RunConfig) -> ReportRow:
    try:
        return cmd_symbol(3, row.p1, row.p2, row.p3, cfg, solution=table2_solution(row, cfg))
    except TripleSymbolError as exc:
        return _error_row(3, row.p1, row.p2, row.p3, exc)


def cmd_table2(cfg: RunConfig) -> List[ReportRow]:
    return _run_rows(_table2_row, TABLE2_ROWS, cfg)


def _candidate_primes(ell: int, bound: int) -> List[int]:
    if ell == 3:
        return [np.p for np in enumerate_prime_list(bound)]
    return [p for p in range(5, bound + 1) if p % 4 == 1 and is_prime(p)]


def eligible_triples(ell: int, bound: int, max_triples: Optional[int] = None) -> List[tuple]:
    """Ordered triples (p1, p2, p3) up to bound, one per choice of p3 in each set"""
    triples = []
    for a, b, c in combinations(_candidate_primes(ell, bound), 3):
        for triple in ((a, b, c), (a, c, b), (b, c, a)):
            if is_eligible(ell, *triple):
                triples.append(triple)
                if max_triples is not None and len(triples) >= max_triples:
                    return triples
    return triples


def _verify_row(item: tuple, cfg: RunConfig) -> ReportRow:
    ell, (p1, p2, p3) = item
    try:
        row = cmd_symbol(ell, p1, p2, p3, cfg)
    except TripleSymbolError as exc:
        return _error_row(ell, p1, p2, p3, exc)
    try:
        backward = compute_symbol(ell, p2, p1, p3, cfg).symbol
    except TripleSymbolError as exc:
        if exc.error_name not in NOT_TESTABLE:
            return _error_row(ell, p1, p2, p3, exc)
        logger.warning(f"No backward symbol for ({p1},{p2},{p3}): {exc}")
        row.status = "ReciprocityNotTestable"
        return row
    row.symbol_backward_rendered = backward.rendered
    if (row.symbol_exponent + backward.c) % ell != 0:
        logger.error(f"Reciprocity fails for ({p1},{p2},{p3})")
        row.status = "ReciprocityFailed"
    return row


def cmd_verify(ell: int, bound: int, cfg: RunConfig, max_triples: Optional[int] = None) -> List[ReportRow]:
    """Reciprocity and functional equation over eligible triples from the prime range"""
    triples = eligible_triples(ell, bound, max_triples)
    logger.info(f"Verifying {len(triples)} triples for l={ell} up to {bound}")
    return _run_rows(_verify_row, [(ell, triple) for triple in triples], cfg)


def rows_exit_code(rows: Iterable[ReportRow], tolerated: Iterable[str] = ()) -> int:
    tolerated = set(tolerated)
    return max((exit_code_for(row.status) for row in rows if row.status not in tolerated), default=0)
