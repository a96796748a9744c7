"""Plain-text serialization shared by the CLI and the test goldens.

Matrix format: a header line ``m n``, then m lines of n decimal integers
separated by single spaces.  Lines starting with ``#`` and blank lines are
ignored.  The extended form appends a line ``b: v_1 ... v_m`` and optionally
``c: v_1 ... v_n`` for polyhedra and standard-form programs.
"""

from __future__ import annotations

from .errors import DimensionError
from .linalg import IntMatrix


class ParseError(ValueError):
    """Malformed matrix text."""


def _payload_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    return lines


def _parse_ints(line: str, expected: int, what: str) -> tuple[int, ...]:
    parts = line.split()
    if len(parts) != expected:
        raise ParseError(f"{what}: expected {expected} values, got {len(parts)}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ParseError(f"{what}: {exc}") from None


def parse_matrix(text: str) -> IntMatrix:
    lines = _payload_lines(text)
    matrix, rest = _parse_matrix_block(lines)
    if rest:
        raise ParseError(f"trailing content after matrix: {rest[0]!r}")
    return matrix


def _parse_matrix_block(lines: list[str]) -> tuple[IntMatrix, list[str]]:
    if not lines:
        raise ParseError("empty input")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"header must be 'm n', got {lines[0]!r}")
    try:
        m, n = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"header must be 'm n', got {lines[0]!r}") from None
    if m < 1 or n < 1:
        raise ParseError("matrix dimensions must be positive")
    if len(lines) < 1 + m:
        raise ParseError(f"expected {m} matrix rows, found {len(lines) - 1}")
    rows = [_parse_ints(lines[1 + i], n, f"row {i}") for i in range(m)]
    try:
        return IntMatrix.from_rows(rows), lines[1 + m :]
    except DimensionError as exc:
        raise ParseError(str(exc)) from None


def format_matrix(matrix: IntMatrix) -> str:
    lines = [f"{matrix.rows} {matrix.cols}"]
    lines.extend(" ".join(str(x) for x in row) for row in matrix.entries)
    return "\n".join(lines) + "\n"


def parse_polyhedron(text: str) -> tuple[IntMatrix, tuple[int, ...]]:
    """Parses a matrix block followed by a ``b:`` line."""
    lines = _payload_lines(text)
    matrix, rest = _parse_matrix_block(lines)
    if not rest or not rest[0].startswith("b:"):
        raise ParseError("expected a 'b:' line after the matrix block")
    b = _parse_ints(rest[0][2:], matrix.rows, "b")
    if rest[1:]:
        raise ParseError(f"trailing content after b: {rest[1]!r}")
    return matrix, b


def parse_standard_form(
    text: str,
) -> tuple[IntMatrix, tuple[int, ...], tuple[int, ...] | None]:
    """Parses a matrix block, a ``b:`` line, and an optional ``c:`` line."""
    lines = _payload_lines(text)
    matrix, rest = _parse_matrix_block(lines)
    if not rest or not rest[0].startswith("b:"):
        raise ParseError("expected a 'b:' line after the matrix block")
    b = _parse_ints(rest[0][2:], matrix.rows, "b")
    c: tuple[int, ...] | None = None
    rest = rest[1:]
    if rest and rest[0].startswith("c:"):
        c = _parse_ints(rest[0][2:], matrix.cols, "c")
        rest = rest[1:]
    if rest:
        raise ParseError(f"trailing content: {rest[0]!r}")
    return matrix, b, c


def format_polyhedron(matrix: IntMatrix, b: tuple[int, ...]) -> str:
    return format_matrix(matrix) + "b: " + " ".join(str(x) for x in b) + "\n"


def format_standard_form(
    matrix: IntMatrix, b: tuple[int, ...], c: tuple[int, ...] | None = None
) -> str:
    out = format_polyhedron(matrix, b)
    if c is not None:
        out += "c: " + " ".join(str(x) for x in c) + "\n"
    return out
