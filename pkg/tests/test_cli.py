import json

import pytest

from triple_symbols.cli import glue_list_values, main
from triple_symbols.commands import (
    NOT_TESTABLE,
    _verify_row,
    cmd_symbol,
    cmd_verify,
    eligible_triples,
    table2_solution,
)
from triple_symbols.config import RunConfig
from triple_symbols.eligibility import is_eligible
from triple_symbols.norm_equations import NormEquationSolution
from triple_symbols.tables import TABLE2_ROWS

from conftest import GOLDEN_DIR, REGOLD


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def check_golden(name, output):
    path = GOLDEN_DIR / name
    if REGOLD:
        path.write_text(output)
    assert output == path.read_text()


def test_glue_list_values():
    assert glue_list_values(["conjecture", "--triple", "-17,-557,-773"]) == [
        "conjecture", "--triple=-17,-557,-773"]
    assert glue_list_values(["--triple=-1,-2,-3"]) == ["--triple=-1,-2,-3"]


@pytest.mark.slow
def test_table1_golden(capsys):
    code, out = run(capsys, "table1", "--format", "csv")
    assert code == 0
    check_golden("table1.csv", out)


@pytest.mark.slow
def test_table2_golden(capsys):
    code, out = run(capsys, "table2", "--format", "csv", "--jobs", "2")
    assert code == 0
    check_golden("table2.csv", out)


def test_primes(capsys):
    code, out = run(capsys, "primes")
    assert code == 0
    lines = out.split()
    assert len(lines) == 29
    assert lines[0] == "-17" and lines[-1] == "-971"


def test_symbol(capsys):
    code, out = run(capsys, "symbol", "--p1", "-17", "--p2", "-593", "--p3", "-53", "--format", "json")
    assert code == 0
    [row] = json.loads(out)
    assert row["symbol_rendered"] == "z3"
    assert row["solution"] == [9, 2, -1]
    assert row["z"] == "136/729"
    assert (row["li2_z"], row["li2_one_minus_z"]) == (-1, 1)


def test_redei_symbol(capsys):
    code, out = run(capsys, "symbol", "--ell", "2", "--p1", "13", "--p2", "17", "--p3", "101")
    assert code == 0
    assert out.startswith("[13,17,101]_2 = +1")


def test_symbol_failure(capsys):
    code, out = run(capsys, "symbol", "--p1", "-17", "--p2", "-53", "--p3", "-19")
    assert code == 1
    error = json.loads(out)
    assert error["error_name"] == "IneligibleTriple"
    assert "NotInert(-19)" in error["error"]


def test_solve(capsys):
    code, out = run(capsys, "solve", "--p1", "-17", "--p2", "-593")
    assert code == 0
    result = json.loads(out)
    assert result["solutions"] == [[9, 2, -1]]
    assert result["verified"]


def test_conjecture(capsys):
    code, out = run(capsys, "conjecture", "--triple", "-17,-557,-773")
    assert code == 0
    result = json.loads(out)
    assert result["verdict"] is True
    assert len(result["rows"]) == 6


def test_verify(capsys):
    code, out = run(capsys, "verify", "--ell", "2", "--bound", "120", "--max-triples", "3", "--format", "json")
    assert code != 2
    rows = json.loads(out)
    assert 1 <= len(rows) <= 3
    assert all(row["status"] != "ReciprocityFailed" for row in rows)


def test_table2_solution_lookup():
    cfg = RunConfig()
    assert table2_solution(TABLE2_ROWS[0], cfg) == NormEquationSolution(3, 8, 3, -1)
    # printed as -42 - 16*cbrt(-17)
    assert table2_solution(TABLE2_ROWS[6], cfg) == NormEquationSolution(3, -21, -8, 1)
    # printed alpha is not a solution
    assert table2_solution(TABLE2_ROWS[3], cfg) == NormEquationSolution(3, -10, 1, 3)


def test_eligible_triples():
    triples = eligible_triples(3, 1000, max_triples=5)
    assert len(triples) == 5
    assert all(is_eligible(3, *triple) for triple in triples)
    assert all(is_eligible(2, *triple) for triple in eligible_triples(2, 120))


def test_symbol_not_prime_to_p3(capsys):
    code, out = run(capsys, "symbol", "--ell", "2", "--p1", "29", "--p2", "109", "--p3", "5", "--format", "json")
    assert code == 0
    [row] = json.loads(out)
    assert row["solution"] == [211, 30, 13]
    assert row["li2_z"] is not None
    # 5 divides y, so li2(1-z) is undefined
    assert row["li2_one_minus_z"] is None


def test_cmd_symbol_partial_polylog_values():
    cfg = RunConfig()
    row = cmd_symbol(3, -89, -197, -17, cfg)
    assert row.solution == (185, 42, 11)
    assert row.li2_z is not None and row.li2_one_minus_z is not None

    row = cmd_symbol(3, -233, -251, -17, cfg)
    assert row.solution == (-17, 2, 3)
    assert row.symbol_rendered == "1"
    assert (row.li2_z, row.li2_one_minus_z) == (None, None)


@pytest.mark.slow
def test_verify_cubic_batch():
    rows = cmd_verify(3, 1000, RunConfig(), max_triples=60)
    assert len(rows) == 60
    assert all(row.ok or row.status in NOT_TESTABLE for row in rows), [
        (row.p1, row.p2, row.p3, row.status) for row in rows if not row.ok]
    assert sum(row.ok for row in rows) >= 10


def test_verify_row_without_backward_symbol():
    # every solution of the swapped pair up to 200 is +-(-69, 14, 17), and 17 | w
    row = _verify_row((3, (-197, -233, -17)), RunConfig())
    assert row.status == "ReciprocityNotTestable"
    assert row.solution == (69, 17, 14)
    assert row.symbol_backward_rendered is None
    assert row.li2_z is not None and row.li2_one_minus_z is None
