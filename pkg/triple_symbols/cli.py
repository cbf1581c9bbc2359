"""
Command-line interface

    python -m triple_symbols symbol --ell 3 --p1 -17 --p2 -593 --p3 -53
    python -m triple_symbols table1 --format csv
    python -m triple_symbols conjecture --triple=-17,-557,-773

Results go to stdout, logs to stderr. Exit codes: 0 success, 1 domain
failure, 2 internal invariant violation.
"""
import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from .config import OUTPUT_FORMATS, config
from .report import CSV_COLUMNS, TABLE1_COLUMNS, TABLE2_COLUMNS, ReportRow, emit
from .server import SymbolServer

logger = logging.getLogger("triple-symbols")

TABLE_COLUMNS = {"table1": TABLE1_COLUMNS, "table2": TABLE2_COLUMNS}

# flags whose values are comma separated lists of negative numbers
LIST_FLAGS = ("--triple",)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, help="Output format")
    common.add_argument("--debug", action="store_true", help="Enable debug logging")

    parser = argparse.ArgumentParser(
        prog="triple_symbols",
        description="Triple power residue symbols, Milnor invariants and mod-l polylogarithms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    symbol = sub.add_parser("symbol", parents=[common], help="Evaluate one triple")
    symbol.add_argument("--ell", type=int, choices=(2, 3), default=3)
    symbol.add_argument("--p1", type=int, required=True)
    symbol.add_argument("--p2", type=int, required=True)
    symbol.add_argument("--p3", type=int, required=True)
    symbol.add_argument("--bound", type=int, help="Norm equation search bound")
    symbol.add_argument("--enum-bound", dest="enumeration_bound", type=int,
                        help="Wider search bound used when no solution within --bound is prime to p3")
    symbol.add_argument("--retry-limit", type=int)
    symbol.add_argument("--literal-norm", action="store_true", default=None,
                        help="Cross-check with the literal norm test")

    solve = sub.add_parser("solve", parents=[common], help="Solve the norm equation of a pair")
    solve.add_argument("--ell", type=int, choices=(2, 3), default=3)
    solve.add_argument("--p1", type=int, required=True)
    solve.add_argument("--p2", type=int, required=True)
    solve.add_argument("--bound", type=int)
    solve.add_argument("--limit", type=int, help="Enumerate up to this many solutions")

    primes = sub.add_parser("primes", parents=[common], help="List normalized primes")
    primes.add_argument("--bound", type=int, default=1000)

    for name, help_text in (("table1", "Reproduce the (-17,-593) table"),
                            ("table2", "Reproduce the permutation orbit table")):
        table = sub.add_parser(name, parents=[common], help=help_text)
        table.add_argument("--bound", type=int)
        table.add_argument("--jobs", type=int)
        table.add_argument("--full", action="store_true", help="All report columns in CSV output")

    verify = sub.add_parser("verify", parents=[common], help="Batch reciprocity check")
    verify.add_argument("--ell", type=int, choices=(2, 3), default=3)
    verify.add_argument("--bound", type=int, default=1000, help="Largest |p| of the primes used")
    verify.add_argument("--search-bound", type=int)
    verify.add_argument("--enum-bound", dest="enumeration_bound", type=int)
    verify.add_argument("--max-triples", type=int)
    verify.add_argument("--jobs", type=int)

    conjecture = sub.add_parser("conjecture", parents=[common], help="All six orderings of a triple")
    conjecture.add_argument("--ell", type=int, choices=(2, 3), default=3)
    conjecture.add_argument("--triple", required=True, help="Comma separated, e.g. --triple=-17,-557,-773")
    conjecture.add_argument("--bound", type=int)
    conjecture.add_argument("--enum-bound", dest="enumeration_bound", type=int)

    return parser


def glue_list_values(argv: Sequence[str]) -> List[str]:
    """--triple -17,-557,-773 -> --triple=-17,-557,-773 (argparse reads the value as a flag)"""
    glued: List[str] = []
    tokens = list(argv)
    i = 0
    while i < len(tokens):
        if tokens[i] in LIST_FLAGS and i + 1 < len(tokens):
            glued.append(f"{tokens[i]}={tokens[i + 1]}")
            i += 2
            continue
        glued.append(tokens[i])
        i += 1
    return glued


def tool_params(args: argparse.Namespace) -> Dict[str, Any]:
    skip = {"command", "format", "debug", "full"}
    return {key: value for key, value in vars(args).items() if key not in skip and value is not None}


def render(command: str, result: Dict[str, Any], output_format: str, full: bool = False) -> str:
    if "rows" in result:
        rows = [ReportRow.from_dict(row) for row in result["rows"]]
        columns = CSV_COLUMNS if full else TABLE_COLUMNS.get(command, CSV_COLUMNS)
        return emit(rows, output_format, columns)
    if command == "primes" and output_format != "json":
        return "\n".join(str(p["p"]) for p in result["primes"]) + "\n"
    return json.dumps(result, indent=2, default=str) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(glue_list_values(argv))

    logging.basicConfig(
        level=logging.DEBUG if args.debug or config.server.debug else getattr(logging, config.server.log_level.upper(), logging.INFO),
        format='%(asctime)s [%(levelname)s] %(message)s',
        stream=sys.stderr,
    )

    output_format = args.format or config.output.output_format
    server = SymbolServer()
    outcome = server.execute_tool(args.command, tool_params(args))

    if not outcome["success"]:
        error = {"error_name": outcome["error_name"], "error": outcome["error"]}
        if "available" in outcome:
            error["available"] = outcome["available"]
        sys.stdout.write(json.dumps(error) + "\n")
        return outcome["exit_code"]

    result = outcome["result"]
    sys.stdout.write(render(args.command, result, output_format, getattr(args, "full", False)))
    return result.get("exit_code", 0)
