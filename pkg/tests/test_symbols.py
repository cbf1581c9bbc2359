import pytest

from triple_symbols.commands import cmd_symbol, eligible_triples
from triple_symbols.config import RunConfig
from triple_symbols.eligibility import check_triple
from triple_symbols.errors import (
    AssumptionANotWitnessed,
    DegenerateTheta,
    IneligibleTriple,
    NotFoundWithinBound,
    PartialOrbit,
    ReciprocityNotTestable,
    ThetaNotUnitAtP3,
)
from triple_symbols.norm_equations import NormEquationSolution, SearchConfig, enumerate_solutions
from triple_symbols.polylog import chi2_mod_l, rho_x
from triple_symbols.residue import algebra_components
from triple_symbols.symbols import (
    SymbolValue,
    compute_symbol,
    cubic_norm_test,
    evaluate_symbol,
    milnor_invariant,
    permutation_experiment,
    permutation_sign,
    reciprocity_check,
    rank_candidates,
    redei_symbol,
    solution_candidates,
    triple_cubic_symbol,
)
from triple_symbols.tables import table1_primes
from triple_symbols.theta import (
    ThetaData,
    swapped_theta,
    swapped_theta_unit_at_p3,
    theta_of_solution,
    theta_unit_at_p3,
    x_unit_at_p3,
)


def test_symbol_value_rendering():
    assert SymbolValue(3, 4).c == 1
    assert SymbolValue(3, 1).rendered == "z3"
    assert SymbolValue(3, -1).rendered == "z3^-1"
    assert str(SymbolValue(3, 0)) == "1"
    assert SymbolValue(2, 1).rendered == "-1"
    assert SymbolValue.parse(3, "z3^-1") == SymbolValue(3, 2)
    assert SymbolValue.parse(2, "+1").c == 0
    assert milnor_invariant(SymbolValue(3, 2)) == 2


def test_theta_of_solution():
    sol = NormEquationSolution(3, 9, 2, -1)
    theta = theta_of_solution(sol, -17)
    assert theta == ThetaData(3, 9, 2, -17)
    assert swapped_theta(sol, -17, -593) == ThetaData(3, 9, 1, -593)
    with pytest.raises(DegenerateTheta):
        theta_of_solution(NormEquationSolution(3, 1, 0, 1), -17)
    with pytest.raises(DegenerateTheta):
        swapped_theta(NormEquationSolution(3, 1, 1, 0), -17, -593)


def test_unit_checks_at_p3():
    sol = NormEquationSolution(2, 211, 30, 13)
    assert theta_unit_at_p3(sol, 5) and x_unit_at_p3(sol, 5)
    assert not swapped_theta_unit_at_p3(sol, 5)
    sol = NormEquationSolution(3, -17, 2, 3)
    assert theta_unit_at_p3(sol, 17) and swapped_theta_unit_at_p3(sol, 17)
    assert not x_unit_at_p3(sol, 17)
    assert not theta_unit_at_p3(NormEquationSolution(2, 263, 6, 25), 5)


def test_theta_components_match_algebra_element(table1_ctx):
    theta = ThetaData(3, 9, 2, -17)
    for p3 in (-53, -233, -773):
        q = table1_ctx(p3).q3
        assert theta.components(q) == algebra_components(theta.algebra_element(q))


def test_cubic_symbol_values(table1_ctx):
    theta = ThetaData(3, 9, 2, -17)
    assert triple_cubic_symbol(table1_ctx(-53), theta) == SymbolValue(3, 1)
    assert triple_cubic_symbol(table1_ctx(-233), theta) == SymbolValue(3, 0)
    assert triple_cubic_symbol(table1_ctx(-773), theta) == SymbolValue(3, 2)


def test_cubic_symbol_literal_norm_check(table1_ctx):
    theta = ThetaData(3, 9, 2, -17)
    ctx = table1_ctx(-53)
    assert triple_cubic_symbol(ctx, theta, literal_norm_check=True).c == 1
    assert [c for c in range(3) if cubic_norm_test(ctx, theta, c)] == [1]


def test_compute_symbol():
    result = compute_symbol(3, -17, -593, -53)
    assert result.solution == NormEquationSolution(3, 9, 2, -1)
    assert result.symbol.rendered == "z3"
    assert result.mu == 1
    assert result.retries == 0

    assert compute_symbol(3, -593, -17, -53).symbol.c == 2
    assert compute_symbol(3, 17, 593, 53).symbol.c == 1
    assert compute_symbol(3, -17, -593, -53, RunConfig(literal_norm_check=True)).symbol.c == 1


def test_compute_symbol_not_found():
    with pytest.raises(NotFoundWithinBound):
        compute_symbol(2, 13, 17, 101, RunConfig(search_bound=1, enumeration_bound=1))


def test_solution_candidates_extend_to_enumeration_bound():
    ctx = check_triple(3, -89, -197, -17)
    assert list(solution_candidates(ctx, RunConfig())) == [
        NormEquationSolution(3, 187, 35, -24),
        NormEquationSolution(3, -187, -35, 24),
        NormEquationSolution(3, 185, 42, 11),
        NormEquationSolution(3, -185, -42, -11),
    ]
    assert list(solution_candidates(ctx, RunConfig(enumeration_bound=100))) == []


def test_rank_candidates():
    prime_to_5 = NormEquationSolution(2, 7, 2, 1)
    five_divides_y = NormEquationSolution(2, 211, 30, 13)
    five_divides_x = NormEquationSolution(2, 15, 2, 1)
    five_divides_w = NormEquationSolution(2, 263, 6, 25)
    ranked = rank_candidates([five_divides_x, five_divides_w, five_divides_y, prime_to_5], 5)
    assert list(ranked) == [prime_to_5, five_divides_y, five_divides_x]


def test_compute_symbol_prefers_solutions_prime_to_p3():
    # no solution for (29, 109) is prime to 5; (211, 30, 13) is the first with only 5 | y
    result = compute_symbol(2, 29, 109, 5)
    assert result.solution == NormEquationSolution(2, 211, 30, 13)
    assert result.symbol.rendered == "+1"

    # (187, 35, -24) has 17 | x and (185, 42, 11) lies past the search bound
    assert compute_symbol(3, -89, -197, -17).solution == NormEquationSolution(3, 185, 42, 11)
    with pytest.raises(AssumptionANotWitnessed):
        compute_symbol(3, -89, -197, -17, RunConfig(enumeration_bound=100))


def test_compute_symbol_falls_back_to_p3_dividing_x():
    # +-(-17, 2, 3) are the only solutions up to 200; theta is still a unit at 17
    result = compute_symbol(3, -233, -251, -17)
    assert result.solution == NormEquationSolution(3, -17, 2, 3)
    assert result.symbol.rendered == "1"


def test_explicit_solution_needs_theta_unit_at_p3():
    with pytest.raises(ThetaNotUnitAtP3):
        compute_symbol(2, 29, 109, 5, solution=NormEquationSolution(2, 263, 6, 25))
    assert compute_symbol(2, 29, 109, 5, solution=NormEquationSolution(2, 15, 2, 1)).symbol.rendered == "+1"


def test_symbol_is_independent_of_solution():
    ctx = check_triple(3, -17, -593, -53)
    solutions = [sol for sol in enumerate_solutions(-17, -593, SearchConfig(60)) if theta_unit_at_p3(sol, 53)]
    assert len(solutions) >= 2
    assert {evaluate_symbol(ctx, sol) for sol in solutions} == {SymbolValue(3, 1)}


def test_cubic_chi2_is_independent_of_solution():
    ctx = check_triple(3, -17, -593, -53)
    solutions = [
        sol for sol in enumerate_solutions(-17, -593, SearchConfig(60))
        if theta_unit_at_p3(sol, 53) and x_unit_at_p3(sol, 53)
    ]
    # l = 3: chi2 equals mu
    assert {chi2_mod_l(ctx, sol) for sol in solutions} == {1}


def test_redei_symbol():
    ctx = check_triple(2, 13, 17, 101)
    theta = theta_of_solution(NormEquationSolution(2, -15, 4, 1), 13)
    assert theta.square_root_images(101)[0] != theta.square_root_images(101)[1]
    assert redei_symbol(ctx, theta) == SymbolValue(2, 0)
    assert compute_symbol(2, 13, 17, 101).symbol.rendered == "+1"


@pytest.mark.parametrize("triple", [(13, 17, 101)] + eligible_triples(2, 120, max_triples=6))
def test_redei_symbol_is_independent_of_solution(triple):
    ctx = check_triple(2, *triple)
    q = ctx.q3
    solutions = [
        sol for sol in enumerate_solutions(ctx.p1, ctx.p2, SearchConfig(40), ell=2)
        if theta_unit_at_p3(sol, q)
    ]
    assert len({evaluate_symbol(ctx, sol) for sol in solutions}) <= 1
    # l = 2: chi2 - rho_x is what stays fixed
    assert len({(chi2_mod_l(ctx, sol) - rho_x(sol, ctx.p3)) % 2 for sol in solutions if x_unit_at_p3(sol, q)}) <= 1


def test_redei_symbol_agrees_across_solutions():
    ctx = check_triple(2, 13, 17, 101)
    solutions = enumerate_solutions(13, 17, SearchConfig(40), ell=2)
    assert len(solutions) >= 8
    assert {evaluate_symbol(ctx, sol).c for sol in solutions if theta_unit_at_p3(sol, 101)} == {0}


def test_reciprocity():
    report = reciprocity_check(3, -17, -593, -53)
    assert (report.forward.rendered, report.backward.rendered) == ("z3", "z3^-1")
    assert report.product_is_identity
    assert report.to_dict()["product_is_identity"] is True

    assert reciprocity_check(2, 13, 17, 101).product_is_identity


def test_reciprocity_not_testable():
    with pytest.raises(ReciprocityNotTestable):
        reciprocity_check(3, -17, -593, -53, RunConfig(search_bound=1, enumeration_bound=1))


def test_permutation_sign():
    assert permutation_sign((0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    assert permutation_sign((1, 2, 0)) == 1
    assert permutation_sign((2, 1, 0)) == -1


def test_permutation_experiment_trivial_orbit():
    report = permutation_experiment(3, (-17, -53, -431))
    assert len(report.values) == 6
    assert {value.rendered for value in report.values.values()} == {"1"}
    assert report.verdict


def test_permutation_experiment_nontrivial_orbit():
    report = permutation_experiment(3, (-17, -557, -773))
    rendered = {order: value.rendered for order, value in report.values.items()}
    assert rendered == {
        (-17, -557, -773): "z3",
        (-557, -17, -773): "z3^-1",
        (-17, -773, -557): "z3^-1",
        (-773, -557, -17): "z3^-1",
        (-557, -773, -17): "z3",
        (-773, -17, -557): "z3",
    }
    assert report.verdict
    rows = report.to_dict()["rows"]
    assert rows[0] == {"order": [-17, -557, -773], "sign": 1, "symbol": "z3"}


def test_permutation_experiment_redei():
    report = permutation_experiment(2, (13, 17, 101))
    assert len(report.values) == 6
    assert report.verdict


def test_permutation_experiment_errors():
    with pytest.raises(IneligibleTriple):
        permutation_experiment(3, (-17, -19, -53))
    with pytest.raises(PartialOrbit) as info:
        permutation_experiment(3, (-17, -557, -773), RunConfig(search_bound=1, enumeration_bound=1))
    assert info.value.available == {}


@pytest.mark.slow
def test_redei_properties_over_small_primes():
    tested = 0
    for p1, p2, p3 in eligible_triples(2, 500, max_triples=60):
        try:
            # cmd_symbol cross-checks mu and the functional equation itself
            row = cmd_symbol(2, p1, p2, p3, RunConfig())
        except NotFoundWithinBound:
            continue
        assert row.mu == row.symbol_exponent
        try:
            orbit = permutation_experiment(2, (p1, p2, p3))
        except PartialOrbit as exc:
            assert "NotFoundWithinBound" in str(exc), (p1, p2, p3)
            assert "ThetaNotUnitAtP3" not in str(exc), (p1, p2, p3)
        else:
            assert orbit.verdict, (p1, p2, p3)
        tested += 1
    assert tested >= 20


@pytest.mark.slow
def test_cubic_reciprocity_and_norm_test_over_table1():
    cfg = RunConfig(literal_norm_check=True)
    for p3 in table1_primes():
        assert reciprocity_check(3, -17, -593, p3, cfg).product_is_identity, p3


def test_redei_regression_constants():
    assert compute_symbol(2, 5, 29, 109).symbol == SymbolValue(2, 0)
    assert compute_symbol(2, 5, 29, 109).solution == NormEquationSolution(2, 7, 2, 1)


def test_reciprocity_on_orbit_table_pair():
    report = reciprocity_check(3, -17, -557, -773)
    assert (report.forward.rendered, report.backward.rendered) == ("z3", "z3^-1")
