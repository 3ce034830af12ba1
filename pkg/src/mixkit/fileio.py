"""Parsing of the CLI's input files.

All formats are plain text: dense matrices as CSV/TSV (delimiter sniffed per
file), samples as numeric columns with an optional header line, and triples
as a "n m l" header followed by n*m rows of l values, X-major.  Errors carry
1-based line and column positions.
"""

from __future__ import annotations

import numpy as np

from .errors import InputError


def _read_lines(path: str) -> list[str]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as err:
        raise InputError(f"cannot read {path}: {err}") from err
    return [line for line in raw.splitlines() if line.strip() != ""]


def _split(line: str) -> list[str]:
    if "\t" in line:
        return [c.strip() for c in line.split("\t")]
    if "," in line:
        return [c.strip() for c in line.split(",")]
    return line.split()


def _parse_cell(cell: str, path: str, lineno: int, col: int) -> float:
    try:
        return float(cell)
    except ValueError:
        raise InputError(
            f"{path}: line {lineno}, column {col}: {cell!r} is not a number"
        ) from None


def parse_matrix(path: str) -> np.ndarray:
    """Dense rectangular matrix; every row must have the same width."""
    lines = _read_lines(path)
    if not lines:
        raise InputError(f"{path}: no data rows")
    rows = []
    width = None
    for lineno, line in enumerate(lines, start=1):
        cells = _split(line)
        if width is None:
            width = len(cells)
        elif len(cells) != width:
            raise InputError(
                f"{path}: line {lineno} has {len(cells)} values, expected {width}"
            )
        rows.append(
            [_parse_cell(c, path, lineno, j) for j, c in enumerate(cells, start=1)]
        )
    return np.array(rows, dtype=float)


def parse_samples(path: str, min_cols: int = 2) -> tuple[np.ndarray, list[str] | None]:
    """Numeric columns with an optional single header line.

    Returns (l-by-p array, column names or None).  The first line is treated
    as a header exactly when at least one of its cells fails to parse as a
    number.
    """
    lines = _read_lines(path)
    if not lines:
        raise InputError(f"{path}: no data rows")
    first = _split(lines[0])
    names = None
    start = 0
    try:
        [float(c) for c in first]
    except ValueError:
        names = first
        start = 1
    width = len(first)
    if width < min_cols:
        raise InputError(f"{path}: need at least {min_cols} columns, found {width}")
    data = []
    for lineno, line in enumerate(lines[start:], start=start + 1):
        cells = _split(line)
        if len(cells) != width:
            raise InputError(
                f"{path}: line {lineno} has {len(cells)} values, expected {width}"
            )
        data.append(
            [_parse_cell(c, path, lineno, j) for j, c in enumerate(cells, start=1)]
        )
    if not data:
        raise InputError(f"{path}: header but no data rows")
    return np.array(data, dtype=float), names


def parse_tensor(path: str) -> np.ndarray:
    """Triple tensor: header "n m l", then n*m lines of l values, X-major."""
    lines = _read_lines(path)
    if not lines:
        raise InputError(f"{path}: empty tensor file")
    header = _split(lines[0])
    if len(header) != 3:
        raise InputError(f"{path}: line 1: tensor header must be three integers 'n m l'")
    try:
        n, m, l = (int(c) for c in header)
    except ValueError:
        raise InputError(f"{path}: line 1: tensor header must be three integers") from None
    if min(n, m, l) < 1:
        raise InputError(f"{path}: tensor dimensions must be positive, got {n} {m} {l}")
    if len(lines) - 1 != n * m:
        raise InputError(
            f"{path}: expected {n * m} data lines after the header, found {len(lines) - 1}"
        )
    flat = []
    for lineno, line in enumerate(lines[1:], start=2):
        cells = _split(line)
        if len(cells) != l:
            raise InputError(
                f"{path}: line {lineno} has {len(cells)} values, expected {l}"
            )
        flat.append(
            [_parse_cell(c, path, lineno, j) for j, c in enumerate(cells, start=1)]
        )
    return np.array(flat, dtype=float).reshape(n, m, l)
