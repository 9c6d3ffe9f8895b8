"""Matrix Market reader for dense use.

Supports the ``array`` and ``coordinate`` formats with real, integer, and
complex fields and general/symmetric/skew-symmetric/hermitian symmetry.
Symmetric storage is expanded to a full matrix on read.  Indices are
1-based in files, matching the format specification.
"""
from __future__ import annotations

import numpy as np

from .core import DataError

__all__ = ["ParseError", "DimensionMismatch", "read_matrix_market"]

_FIELDS = ("real", "integer", "complex")
_SYMMETRIES = ("general", "symmetric", "skew-symmetric", "hermitian")


class ParseError(DataError):
    """Syntactically invalid Matrix Market content, with a 1-based line number."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class DimensionMismatch(DataError):
    """Entry counts or indices inconsistent with the declared dimensions."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


def read_matrix_market(path) -> np.ndarray:
    """Read a Matrix Market file into a dense complex matrix."""
    with open(path, "r", encoding="ascii") as handle:
        lines = handle.read().splitlines()
    return _parse(lines)


def _parse(lines: list[str]) -> np.ndarray:
    if not lines:
        raise ParseError(1, "empty file")
    header = lines[0].strip().split()
    if len(header) != 5 or header[0].lower() != "%%matrixmarket":
        raise ParseError(1, "expected header '%%MatrixMarket object format field symmetry'")
    obj, fmt, field, symmetry = (tok.lower() for tok in header[1:])
    if obj != "matrix":
        raise ParseError(1, f"unsupported object {obj!r}")
    if fmt not in ("array", "coordinate"):
        raise ParseError(1, f"unsupported format {fmt!r}")
    if field not in _FIELDS:
        raise ParseError(1, f"unsupported field {field!r}")
    if symmetry not in _SYMMETRIES:
        raise ParseError(1, f"unsupported symmetry {symmetry!r}")

    # Data lines with their original 1-based numbers, comments/blanks skipped.
    body = [
        (number, line.strip())
        for number, line in enumerate(lines[1:], start=2)
        if line.strip() and not line.lstrip().startswith("%")
    ]
    if not body:
        raise ParseError(len(lines) + 1, "missing size line")

    size_number, size_line = body[0]
    entries = body[1:]
    if fmt == "array":
        return _parse_array(size_number, size_line, entries, field, symmetry)
    return _parse_coordinate(size_number, size_line, entries, field, symmetry)


def _parse_size(number: int, line: str, count: int) -> tuple[int, ...]:
    tokens = line.split()
    if len(tokens) != count:
        raise ParseError(number, f"size line must have {count} integers")
    try:
        values = tuple(int(tok) for tok in tokens)
    except ValueError:
        raise ParseError(number, f"invalid size line {line!r}") from None
    if any(v < 0 for v in values):
        raise ParseError(number, "sizes must be nonnegative")
    return values


def _parse_value(number: int, tokens: list[str], field: str) -> complex:
    if field == "complex":
        if len(tokens) != 2:
            raise ParseError(number, "complex entries need a real and imaginary part")
        try:
            return complex(float(tokens[0]), float(tokens[1]))
        except ValueError:
            raise ParseError(number, f"invalid complex value {' '.join(tokens)!r}") from None
    if len(tokens) != 1:
        raise ParseError(number, f"expected a single {field} value")
    try:
        if field == "integer":
            return complex(int(tokens[0]))
        return complex(float(tokens[0]))
    except ValueError:
        raise ParseError(number, f"invalid {field} value {tokens[0]!r}") from None


def _mirror(value: complex, symmetry: str) -> complex:
    if symmetry == "symmetric":
        return value
    if symmetry == "hermitian":
        return value.conjugate()
    return -value  # skew-symmetric


def _parse_array(size_number, size_line, entries, field, symmetry) -> np.ndarray:
    rows, cols = _parse_size(size_number, size_line, 2)
    if symmetry != "general" and rows != cols:
        raise DimensionMismatch(size_number, "symmetric array storage requires a square matrix")
    matrix = np.zeros((rows, cols), dtype=complex)

    if symmetry == "general":
        slots = [(i, j) for j in range(cols) for i in range(rows)]
    elif symmetry == "skew-symmetric":
        slots = [(i, j) for j in range(cols) for i in range(j + 1, rows)]
    else:
        slots = [(i, j) for j in range(cols) for i in range(j, rows)]

    if len(entries) != len(slots):
        last = entries[-1][0] if entries else size_number
        raise DimensionMismatch(
            last, f"array body has {len(entries)} values, expected {len(slots)}"
        )
    for (number, line), (i, j) in zip(entries, slots):
        value = _parse_value(number, line.split(), field)
        matrix[i, j] = value
        if symmetry != "general" and i != j:
            matrix[j, i] = _mirror(value, symmetry)
    return matrix


def _parse_coordinate(size_number, size_line, entries, field, symmetry) -> np.ndarray:
    rows, cols, nnz = _parse_size(size_number, size_line, 3)
    if symmetry != "general" and rows != cols:
        raise DimensionMismatch(size_number, "symmetric storage requires a square matrix")
    if len(entries) != nnz:
        last = entries[-1][0] if entries else size_number
        raise DimensionMismatch(
            last, f"coordinate body has {len(entries)} entries, declared {nnz}"
        )
    matrix = np.zeros((rows, cols), dtype=complex)
    width = 3 if field == "complex" else 2
    for number, line in entries:
        tokens = line.split()
        if len(tokens) != width + 1:
            raise ParseError(number, f"expected 'i j value' with {width - 1} value token(s)")
        try:
            i = int(tokens[0])
            j = int(tokens[1])
        except ValueError:
            raise ParseError(number, f"invalid indices {tokens[0]!r} {tokens[1]!r}") from None
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise DimensionMismatch(number, f"index ({i}, {j}) outside {rows}x{cols}")
        value = _parse_value(number, tokens[2:], field)
        matrix[i - 1, j - 1] += value
        if symmetry != "general" and i != j:
            matrix[j - 1, i - 1] += _mirror(value, symmetry)
    return matrix
