"""
Report rows and their JSON / CSV / text renderings
"""
import csv
import io
import json
from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

CSV_COLUMNS: Tuple[str, ...] = (
    "ell", "p1", "p2", "p3", "solution", "z", "symbol_exponent", "symbol_rendered",
    "mu", "li2_z", "li2_one_minus_z", "status", "symbol_backward_rendered",
)

# Projections diffed against the reference tables
TABLE1_COLUMNS: Tuple[str, ...] = (
    "p3", "symbol_rendered", "symbol_backward_rendered", "li2_z", "li2_one_minus_z",
)
TABLE2_COLUMNS: Tuple[str, ...] = (
    "p1", "p2", "solution", "z", "p3", "symbol_rendered", "li2_z",
)

_INT_FIELDS = {"ell", "p1", "p2", "p3", "symbol_exponent", "mu", "li2_z", "li2_one_minus_z"}


@dataclass
class ReportRow:
    """One evaluated triple; status is "ok" or the error name"""
    ell: int
    p1: int
    p2: int
    p3: Optional[int] = None
    solution: Optional[Tuple[int, int, int]] = None
    z: Optional[str] = None
    symbol_exponent: Optional[int] = None
    symbol_rendered: Optional[str] = None
    mu: Optional[int] = None
    li2_z: Optional[int] = None
    li2_one_minus_z: Optional[int] = None
    status: str = "ok"
    symbol_backward_rendered: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        if self.solution is not None:
            data["solution"] = list(self.solution)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ReportRow":
        known = {f.name for f in fields(cls)}
        values = {k: v for k, v in data.items() if k in known}
        if values.get("solution") is not None:
            values["solution"] = tuple(values["solution"])
        return cls(**values)


# ==================== JSON ====================

def emit_json(rows: Sequence[ReportRow]) -> str:
    return json.dumps([row.to_dict() for row in rows], indent=2, default=str)


def parse_json(text: str) -> List[ReportRow]:
    return [ReportRow.from_dict(item) for item in json.loads(text)]


# ==================== CSV ====================

def _csv_value(row: ReportRow, column: str) -> str:
    value = getattr(row, column)
    if value is None:
        return ""
    if column == "solution":
        return "(" + ",".join(str(v) for v in value) + ")"
    return str(value)


def emit_csv(rows: Iterable[ReportRow], columns: Sequence[str] = CSV_COLUMNS) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_value(row, column) for column in columns])
    return buffer.getvalue()


def parse_csv(text: str) -> List[ReportRow]:
    """Inverse of emit_csv for the full column set"""
    rows = []
    for record in csv.DictReader(io.StringIO(text)):
        values: Dict[str, Any] = {}
        for column, raw in record.items():
            if raw == "":
                values[column] = None
            elif column == "solution":
                values[column] = tuple(int(v) for v in raw.strip("()").split(","))
            elif column in _INT_FIELDS:
                values[column] = int(raw)
            else:
                values[column] = raw
        if values.get("status") is None:
            values["status"] = "ok"
        rows.append(ReportRow(**values))
    return rows


# ==================== Text ====================

def format_row(row: ReportRow) -> str:
    triple = f"[{row.p1},{row.p2},{row.p3}]_{row.ell}"
    if not row.ok:
        return f"{triple}  {row.status}"
    parts = [f"{triple} = {row.symbol_rendered}"]
    if row.symbol_backward_rendered is not None:
        parts.append(f"backward={row.symbol_backward_rendered}")
    parts.append(f"mu={row.mu}")
    if row.li2_z is not None:
        parts.append(f"li2(z)={row.li2_z}")
    if row.li2_one_minus_z is not None:
        parts.append(f"li2(1-z)={row.li2_one_minus_z}")
    if row.z is not None:
        parts.append(f"z={row.z}")
    if row.solution is not None:
        parts.append("sol=(" + ",".join(str(v) for v in row.solution) + ")")
    return "  ".join(parts)


def emit_text(rows: Iterable[ReportRow]) -> str:
    return "\n".join(format_row(row) for row in rows) + "\n"


def emit(rows: Sequence[ReportRow], output_format: str, columns: Sequence[str] = CSV_COLUMNS) -> str:
    if output_format == "json":
        return emit_json(rows)
    if output_format == "csv":
        return emit_csv(rows, columns)
    return emit_text(rows)
