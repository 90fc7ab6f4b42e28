"""Delimited-text ingestion into point clouds.

Dialect: UTF-8, LF or CRLF line endings, single-character delimiter
(comma by default), '#'-prefixed comment lines ignored, no quoted fields.
Only '.' is accepted as the decimal separator; scientific notation is fine.
The two demo datasets (monthly temperature vs rainfall, and a 24-day
infection count series) ship as package data.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .cloud import PointCloud
from .errors import ColumnNotFound, EmptyDataset, ParseError, RaggedRow
from .vectors import Vector

__all__ = [
    "DatasetSpec",
    "parse",
    "auto_detect_header",
    "EXAMPLE_DATASETS",
    "load_example",
    "example_csv_text",
]

EXAMPLE_DATASETS = ("example1_amarante.csv", "example2_infections.csv")


@dataclass(frozen=True)
class DatasetSpec:
    """How to read one delimited file into (x, y) columns.

    ``x_col``/``y_col`` accept either a zero-based index or a header name.
    ``has_header`` of ``None`` means auto-detect.
    """

    delimiter: str = ","
    has_header: bool | None = None
    x_col: int | str = 0
    y_col: int | str = 1

    def __post_init__(self):
        if len(self.delimiter) != 1:
            raise ValueError("delimiter must be a single character")
        if self.x_col == self.y_col:
            raise ValueError("x_col and y_col must differ")


def _try_float(field: str) -> float | None:
    try:
        v = float(field)
    except ValueError:
        return None
    # Reject nan/inf spellings; clouds require finite data.
    if v != v or v in (float("inf"), float("-inf")):
        return None
    return v


def _rows(content: str, delimiter: str) -> list[tuple[int, list[str]]]:
    """Split into (1-based line number, trimmed fields), skipping blanks and comments."""
    out = []
    for lineno, raw in enumerate(content.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        out.append((lineno, [f.strip() for f in line.split(delimiter)]))
    return out


def auto_detect_header(content: str, delimiter: str = ",") -> bool:
    """True iff the first row contains any field that fails numeric parsing."""
    rows = _rows(content, delimiter)
    if not rows:
        raise EmptyDataset("no rows in input")
    _, fields = rows[0]
    return any(_try_float(f) is None for f in fields)


def _resolve_column(col: int | str, header: list[str] | None, lineno: int) -> int:
    if isinstance(col, int):
        return col
    if header is None:
        raise ColumnNotFound(f"column {col!r} requested by name but the input has no header")
    try:
        return header.index(col)
    except ValueError:
        raise ColumnNotFound(
            f"column {col!r} not found in header {header!r} (line {lineno})"
        ) from None


def parse(spec: DatasetSpec, content: str) -> PointCloud:
    """Parse delimited text into a point cloud, one point per data row."""
    if not content.strip():
        raise EmptyDataset("input is empty")
    rows = _rows(content, spec.delimiter)
    if not rows:
        raise EmptyDataset("no data rows in input")

    has_header = spec.has_header
    if has_header is None:
        has_header = auto_detect_header(content, spec.delimiter)
    header = rows[0][1] if has_header else None
    data_rows = rows[1:] if has_header else rows
    if not data_rows:
        raise EmptyDataset("no data rows after the header")

    header_line = rows[0][0]
    ix = _resolve_column(spec.x_col, header, header_line)
    iy = _resolve_column(spec.y_col, header, header_line)
    if ix == iy:
        raise ColumnNotFound("x and y resolve to the same column")

    needed = max(ix, iy) + 1
    xs: list[float] = []
    ys: list[float] = []
    for lineno, fields in data_rows:
        if len(fields) < needed:
            raise RaggedRow(lineno, len(fields), needed)
        row_vals = []
        for col_index in (ix, iy):
            v = _try_float(fields[col_index])
            if v is None:
                raise ParseError(
                    lineno, col_index + 1, f"not a finite number: {fields[col_index]!r}"
                )
            row_vals.append(v)
        xs.append(row_vals[0])
        ys.append(row_vals[1])
    return PointCloud(Vector(xs), Vector(ys))


def example_csv_text(name: str) -> str:
    """Raw CSV text of a bundled demo dataset."""
    if name not in EXAMPLE_DATASETS:
        raise ValueError(f"unknown example dataset {name!r}; choose from {EXAMPLE_DATASETS}")
    return resources.files("geomfit.data").joinpath(name).read_text(encoding="utf-8")


def load_example(name: str) -> PointCloud:
    """Parse a bundled demo dataset into a point cloud."""
    return parse(DatasetSpec(), example_csv_text(name))
