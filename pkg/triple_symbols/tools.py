"""
Triple symbol tools
Every command exposed as a named tool with a params-dict handler, plus the
JSON schemas served over MCP
"""
import logging
from typing import Any, Dict, List, Optional

from .commands import (
    NOT_TESTABLE,
    cmd_conjecture,
    cmd_primes,
    cmd_solve,
    cmd_symbol,
    cmd_table1,
    cmd_table2,
    cmd_verify,
    rows_exit_code,
)
from .config import Config, RunConfig, config as default_config
from .errors import InvalidConfig

logger = logging.getLogger(__name__)


def _require_int(params: Dict[str, Any], name: str) -> int:
    if params.get(name) is None:
        raise InvalidConfig(f"Missing required parameter: {name}")
    return _as_int(name, params[name])


def _optional_int(params: Dict[str, Any], name: str) -> Optional[int]:
    if params.get(name) is None:
        return None
    return _as_int(name, params[name])


def _as_int(name: str, value) -> int:
    try:
        return int(value)
    except (TypeError, ValueError):
        raise InvalidConfig(f"Parameter {name} must be an integer, got {value!r}")


def _triple(params: Dict[str, Any]) -> List[int]:
    raw = params.get("triple")
    if raw is None:
        raise InvalidConfig("Missing required parameter: triple")
    if isinstance(raw, str):
        raw = [part for part in raw.replace(" ", "").split(",") if part]
    triple = [_as_int("triple", value) for value in raw]
    if len(triple) != 3:
        raise InvalidConfig(f"triple needs exactly three primes, got {len(triple)}")
    return triple


class SymbolTools:
    """Triple symbol commands as registry tools"""

    def __init__(self, settings: Optional[Config] = None):
        self.settings = settings or default_config

    def _run_config(self, params: Dict[str, Any], bound_key: str = "bound") -> RunConfig:
        return self.settings.run_config(
            search_bound=_optional_int(params, bound_key),
            enumeration_bound=_optional_int(params, 'enumeration_bound'),
            retry_limit=_optional_int(params, "retry_limit"),
            parallelism=_optional_int(params, "jobs"),
            literal_norm_check=params.get("literal_norm"),
        )

    def get_tools(self) -> List[Dict[str, Any]]:
        """Get list of triple symbol tools"""
        return [
            {
                'name': 'symbol',
                'description': 'Triple symbol, Milnor invariant and li2 values of one prime triple',
                'parameters': {
                    'ell': {'type': 'integer', 'required': False, 'description': '2 or 3', 'default': 3},
                    'p1': {'type': 'integer', 'required': True, 'description': 'First prime'},
                    'p2': {'type': 'integer', 'required': True, 'description': 'Second prime'},
                    'p3': {'type': 'integer', 'required': True, 'description': 'Third prime'},
                    'bound': {'type': 'integer', 'required': False, 'description': 'Norm equation search bound'},
                    'enumeration_bound': {'type': 'integer', 'required': False, 'description': 'Wider search bound used when no solution within bound is prime to p3'},
                    'retry_limit': {'type': 'integer', 'required': False, 'description': 'Extra solutions tried when theta vanishes at p3'},
                    'literal_norm': {'type': 'boolean', 'required': False, 'description': 'Cross-check with the literal norm test'},
                },
                'handler': self.symbol
            },
            {
                'name': 'solve',
                'description': 'Solve the norm equation of a prime pair',
                'parameters': {
                    'ell': {'type': 'integer', 'required': False, 'description': '2 or 3', 'default': 3},
                    'p1': {'type': 'integer', 'required': True, 'description': 'First prime'},
                    'p2': {'type': 'integer', 'required': True, 'description': 'Second prime'},
                    'bound': {'type': 'integer', 'required': False, 'description': 'Search bound'},
                    'limit': {'type': 'integer', 'required': False, 'description': 'Enumerate up to this many solutions'},
                },
                'handler': self.solve
            },
            {
                'name': 'primes',
                'description': 'Normalized primes p = 1 mod 3*sqrt(-3) with |p| up to a bound',
                'parameters': {
                    'bound': {'type': 'integer', 'required': False, 'description': 'Largest |p|', 'default': 1000},
                },
                'handler': self.primes
            },
            {
                'name': 'table1',
                'description': 'Symbols and li2 values for (p1, p2) = (-17, -593) over the prime list',
                'parameters': {
                    'bound': {'type': 'integer', 'required': False, 'description': 'Search bound'},
                    'jobs': {'type': 'integer', 'required': False, 'description': 'Worker processes'},
                },
                'handler': self.table1
            },
            {
                'name': 'table2',
                'description': 'Symbols and li2 values over the three permutation orbits',
                'parameters': {
                    'bound': {'type': 'integer', 'required': False, 'description': 'Search bound'},
                    'jobs': {'type': 'integer', 'required': False, 'description': 'Worker processes'},
                },
                'handler': self.table2
            },
            {
                'name': 'verify',
                'description': 'Check reciprocity and the functional equation over eligible triples',
                'parameters': {
                    'ell': {'type': 'integer', 'required': False, 'description': '2 or 3', 'default': 3},
                    'bound': {'type': 'integer', 'required': False, 'description': 'Largest |p| of the primes used', 'default': 1000},
                    'search_bound': {'type': 'integer', 'required': False, 'description': 'Norm equation search bound'},
                    'enumeration_bound': {'type': 'integer', 'required': False, 'description': 'Wider search bound used when no solution within bound is prime to p3'},
                    'max_triples': {'type': 'integer', 'required': False, 'description': 'Stop after this many triples'},
                    'jobs': {'type': 'integer', 'required': False, 'description': 'Worker processes'},
                },
                'handler': self.verify
            },
            {
                'name': 'conjecture',
                'description': 'Symbols of all six orderings of a triple and the sign-of-permutation verdict',
                'parameters': {
                    'ell': {'type': 'integer', 'required': False, 'description': '2 or 3', 'default': 3},
                    'triple': {'type': 'string', 'required': True, 'description': 'Comma separated primes'},
                    'bound': {'type': 'integer', 'required': False, 'description': 'Search bound'},
                    'enumeration_bound': {'type': 'integer', 'required': False, 'description': 'Wider search bound used when no solution within bound is prime to p3'},
                },
                'handler': self.conjecture
            },
        ]

    def symbol(self, params: Dict[str, Any]) -> Dict[str, Any]:
        row = cmd_symbol(
            _optional_int(params, 'ell') or 3,
            _require_int(params, 'p1'),
            _require_int(params, 'p2'),
            _require_int(params, 'p3'),
            self._run_config(params),
        )
        return {'rows': [row.to_dict()], 'exit_code': 0}

    def solve(self, params: Dict[str, Any]) -> Dict[str, Any]:
        return cmd_solve(
            _optional_int(params, 'ell') or 3,
            _require_int(params, 'p1'),
            _require_int(params, 'p2'),
            self._run_config(params),
            limit=_optional_int(params, 'limit'),
        )

    def primes(self, params: Dict[str, Any]) -> Dict[str, Any]:
        primes = cmd_primes(_optional_int(params, 'bound') or 1000)
        return {'primes': primes, 'count': len(primes)}

    def table1(self, params: Dict[str, Any]) -> Dict[str, Any]:
        rows = cmd_table1(self._run_config(params))
        return {'rows': [row.to_dict() for row in rows], 'exit_code': rows_exit_code(rows)}

    def table2(self, params: Dict[str, Any]) -> Dict[str, Any]:
        rows = cmd_table2(self._run_config(params))
        return {'rows': [row.to_dict() for row in rows], 'exit_code': rows_exit_code(rows)}

    def verify(self, params: Dict[str, Any]) -> Dict[str, Any]:
        rows = cmd_verify(
            _optional_int(params, 'ell') or 3,
            _optional_int(params, 'bound') or 1000,
            self._run_config(params, bound_key='search_bound'),
            max_triples=_optional_int(params, 'max_triples'),
        )
        tested = [row for row in rows if row.status not in NOT_TESTABLE]
        return {
            'rows': [row.to_dict() for row in rows],
            'tested': len(tested),
            'passed': sum(1 for row in tested if row.ok),
            'exit_code': rows_exit_code(rows, tolerated=NOT_TESTABLE),
        }

    def conjecture(self, params: Dict[str, Any]) -> Dict[str, Any]:
        report = cmd_conjecture(_optional_int(params, 'ell') or 3, _triple(params), self._run_config(params))
        report['exit_code'] = 0 if report['verdict'] else 1
        return report


def _schema(tool: Dict[str, Any]) -> Dict[str, Any]:
    properties = {}
    for name, spec in tool['parameters'].items():
        prop = {'type': spec['type'], 'description': spec['description']}
        if 'default' in spec:
            prop['default'] = spec['default']
        properties[name] = prop
    return {
        'type': 'object',
        'properties': properties,
        'required': [name for name, spec in tool['parameters'].items() if spec.get('required')],
    }


TOOL_DEFINITIONS = [
    {
        'name': tool['name'],
        'description': tool['description'],
        'inputSchema': _schema(tool),
    }
    for tool in SymbolTools().get_tools()
]
