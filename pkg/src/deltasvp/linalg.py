"""Exact integer and rational linear algebra on dense matrices.

Everything here works with Python's arbitrary-precision integers; there is
no floating point anywhere.  Determinants use fraction-free single-step
Bareiss elimination, pivoting on the first nonzero entry, so intermediate
values stay polynomially bounded.  Enumerating operations (subdeterminant
scans) take an explicit budget and refuse up front rather than truncate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    BudgetExceededError,
    DimensionError,
    InvariantError,
    RankError,
    SingularMatrixError,
)

#: Default cap on the number of minors an enumeration may evaluate.
DEFAULT_MINOR_BUDGET = 2_000_000


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers, row-major."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.entries, tuple):
            object.__setattr__(self, "entries", tuple(tuple(row) for row in self.entries))
        if len(self.entries) == 0:
            raise DimensionError("matrix needs at least one row")
        width = len(self.entries[0])
        if width == 0:
            raise DimensionError("matrix needs at least one column")
        for row in self.entries:
            if len(row) != width:
                raise DimensionError("ragged rows")
            for x in row:
                if not isinstance(x, int):
                    raise DimensionError(f"non-integer entry {x!r}")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @staticmethod
    def from_rows(rows: Iterable[Sequence[int]]) -> "IntMatrix":
        return IntMatrix(tuple(tuple(row) for row in rows))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        if n < 1:
            raise DimensionError("identity needs n >= 1")
        return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    def submatrix_rows(self, row_indices: Sequence[int]) -> "IntMatrix":
        return IntMatrix(tuple(self.entries[i] for i in row_indices))

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "IntMatrix":
        return IntMatrix(
            tuple(tuple(self.entries[i][j] for j in col_indices) for i in row_indices)
        )

    def matmul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.transpose().entries
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )

    def matvec(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise DimensionError(f"vector of length {len(vec)} against {self.shape}")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols


@dataclass(frozen=True)
class ScaledInverse:
    """Inverse of a square integer matrix B held exactly as adj(B) / det(B).

    Column j of ``numerator`` divided by ``denominator`` is the j-th column
    of B^-1.  The denominator is kept un-reduced: residue computations in
    the solver need the numerators modulo det(B) itself.
    """

    numerator: IntMatrix
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator == 0:
            raise SingularMatrixError("denominator must be nonzero")
        if not self.numerator.is_square():
            raise DimensionError("numerator must be square")

    @property
    def size(self) -> int:
        return self.numerator.rows

    def column_fraction(self, j: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.denominator) for x in self.numerator.column(j))


def _require_square(m: IntMatrix) -> int:
    if not m.is_square():
        raise DimensionError(f"square matrix required, got {m.shape}")
    return m.rows


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free single-step Bareiss elimination."""
    n = _require_square(m)
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            factor = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                # Exact division: the Bareiss identity guarantees divisibility.
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _adjugate_cofactor(m: IntMatrix) -> IntMatrix:
    n = m.rows
    adj = []
    for i in range(n):
        row = []
        for j in range(n):
            keep_rows = [r for r in range(n) if r != j]
            keep_cols = [c for c in range(n) if c != i]
            minor = det(m.submatrix(keep_rows, keep_cols))
            row.append(-minor if (i + j) % 2 else minor)
        adj.append(tuple(row))
    return IntMatrix(tuple(adj))


def _inverse_fraction(m: IntMatrix) -> list[list[Fraction]]:
    n = m.rows
    work = [[Fraction(x) for x in row] + [Fraction(i == j) for j in range(n)]
            for i, row in enumerate(m.entries)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        work[col] = [x / pivot for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


def adjugate(m: IntMatrix) -> IntMatrix:
    """Adjugate of a square matrix: M @ adjugate(M) == det(M) * I exactly.

    Singular input is allowed (the product is then the zero matrix).
    """
    n = _require_square(m)
    if n == 1:
        return IntMatrix(((1,),))
    d = det(m)
    if d == 0:
        return _adjugate_cofactor(m)
    inv = _inverse_fraction(m)
    adj = []
    for row in inv:
        out = []
        for x in row:
            scaled = x * d
            if scaled.denominator != 1:
                raise InvariantError("adjugate entries must be integral")
            out.append(scaled.numerator)
        adj.append(tuple(out))
    return IntMatrix(tuple(adj))


def scaled_inverse(b: IntMatrix) -> ScaledInverse:
    """Exact inverse of b as (adjugate, determinant); b must be nonsingular."""
    n = _require_square(b)
    d = det(b)
    if d == 0:
        raise SingularMatrixError("cannot invert a singular matrix")
    num = adjugate(b)
    product = b.matmul(num)
    for i in range(n):
        for j in range(n):
            if product.entries[i][j] != (d if i == j else 0):
                raise InvariantError("B * adjugate(B) != det(B) * I")
    return ScaledInverse(num, d)


class _RowSpan:
    """Incremental exact row span over the rationals, integer arithmetic only.

    Rows are reduced against previously accepted rows in insertion order;
    each accepted row already has zeros at all earlier pivot columns, so the
    sequential reduction below is a faithful membership test.
    """

    def __init__(self, width: int) -> None:
        self.width = width
        self._basis: list[tuple[int, list[int]]] = []  # (pivot column, reduced row)

    def __len__(self) -> int:
        return len(self._basis)

    def add(self, row: Sequence[int]) -> bool:
        """Add a row; returns True iff it enlarged the span."""
        r = [int(x) for x in row]
        for pivot_col, base in self._basis:
            if r[pivot_col] != 0:
                p = base[pivot_col]
                f = r[pivot_col]
                r = [ri * p - bi * f for ri, bi in zip(r, base)]
                g = 0
                for x in r:
                    g = math.gcd(g, x)
                if g > 1:
                    r = [x // g for x in r]
        pivot_col = next((j for j, x in enumerate(r) if x != 0), None)
        if pivot_col is None:
            return False
        if r[pivot_col] < 0:
            r = [-x for x in r]
        self._basis.append((pivot_col, r))
        return True


def rank(a: IntMatrix) -> int:
    """Exact rank over the rationals."""
    span = _RowSpan(a.cols)
    for row in a.entries:
        span.add(row)
    return len(span)


def find_invertible_rows(a: IntMatrix) -> tuple[int, ...]:
    """Deterministic greedy scan for an invertible row set.

    Rows are scanned in ascending index order; a row is kept iff it strictly
    increases the rank of the rows kept so far.  The result has exactly
    cols(a) indices with det(a[rows]) != 0.
    """
    span = _RowSpan(a.cols)
    kept: list[int] = []
    for i, row in enumerate(a.entries):
        if span.add(row):
            kept.append(i)
            if len(kept) == a.cols:
                return tuple(kept)
    raise RankError(f"matrix has rank {len(kept)} < {a.cols} columns")


def hnf(a: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite normal form: returns (H, U) with A @ U == H.

    U is unimodular.  H has a lower-triangular profile: pivots (topmost
    nonzero entry per column) sit in strictly increasing rows, are positive,
    entries to the left of a pivot in its row are reduced into [0, pivot),
    and zero columns trail.  Plain extended-gcd column operations; no
    asymptotic cleverness.
    """
    m, n = a.rows, a.cols
    h = [list(row) for row in a.entries]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def combine(c: int, j: int, x: int, y: int, p: int, q: int) -> None:
        # (col_c, col_j) <- (x*col_c + y*col_j, p*col_j - q*col_c); det = xp + yq = 1
        for mat in (h, u):
            for row in mat:
                vc, vj = row[c], row[j]
                row[c] = x * vc + y * vj
                row[j] = p * vj - q * vc

    col = 0
    for r in range(m):
        if col >= n:
            break
        for j in range(col + 1, n):
            if h[r][j] == 0:
                continue
            g, x, y = _ext_gcd(h[r][col], h[r][j])
            combine(col, j, x, y, h[r][col] // g, h[r][j] // g)
        if h[r][col] == 0:
            continue
        if h[r][col] < 0:
            for mat in (h, u):
                for row in mat:
                    row[col] = -row[col]
        pivot = h[r][col]
        for j in range(col):
            q = h[r][j] // pivot
            if q != 0:
                for mat in (h, u):
                    for row in mat:
                        row[j] -= q * row[col]
        col += 1
    return IntMatrix.from_rows(h), IntMatrix.from_rows(u)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Returns (g, x, y) with g = gcd(a, b) >= 0 and g == a*x + b*y."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _check_budget(count: int, budget: int, what: str) -> None:
    if count > budget:
        raise BudgetExceededError(f"{what} needs {count} minors, budget is {budget}")


def max_abs_full_rank_subdet(
    a: IntMatrix, budget: int = DEFAULT_MINOR_BUDGET
) -> tuple[int, tuple[int, ...]]:
    """Largest |det| over all full-rank (cols x cols) row submatrices.

    Exhaustive scan in lexicographic row-set order; returns the maximum and
    the lexicographically first witness set.  The matrix must have full
    column rank.
    """
    m, n = a.rows, a.cols
    if rank(a) < n:
        raise RankError("full column rank required")
    _check_budget(math.comb(m, n), budget, "full-rank subdeterminant scan")
    best = -1
    witness: tuple[int, ...] = ()
    for rows in combinations(range(m), n):
        value = abs(det(a.submatrix_rows(rows)))
        if value > best:
            best = value
            witness = rows
    return best, witness


def is_totally_delta_modular(
    a: IntMatrix, delta: int, budget: int = DEFAULT_MINOR_BUDGET
) -> bool:
    """True iff every square minor of every size has |det| <= delta."""
    m, n = a.rows, a.cols
    total = sum(math.comb(m, k) * math.comb(n, k) for k in range(1, min(m, n) + 1))
    _check_budget(total, budget, "total minor scan")
    for k in range(1, min(m, n) + 1):
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                if abs(det(a.submatrix(rows, cols))) > delta:
                    return False
    return True


def gcd_full_rank_subdets(a: IntMatrix, budget: int = DEFAULT_MINOR_BUDGET) -> int:
    """gcd of |det| over all maximal full-rank column submatrices.

    The input must have full row rank; zero minors are ignored.
    """
    m, n = a.rows, a.cols
    if m > n or rank(a) < m:
        raise RankError("full row rank required")
    _check_budget(math.comb(n, m), budget, "gcd subdeterminant scan")
    g = 0
    for cols in combinations(range(n), m):
        g = math.gcd(g, det(a.submatrix(range(m), cols)))
        if g == 1:
            return 1
    return g


def subdet_ratio_check(
    a: IntMatrix,
    base_rows: Sequence[int],
    i_rows: Sequence[int],
    j_cols: Sequence[int],
) -> bool:
    """Exact test of the determinant-ratio identity used for solver progress.

    With B = a[base_rows] invertible and |I| = |J|, compares
    |det (A B^-1)_{I,J}| against |det(rows of A indexed by I stacked with the
    rows of B not indexed by J)| / |det B|, both as exact rationals.
    """
    n = a.cols
    if len(base_rows) != n:
        raise DimensionError("base row set must have one row per column")
    if len(i_rows) != len(j_cols):
        raise DimensionError("row and column selections must have equal size")
    if len(set(j_cols)) != len(j_cols) or any(not 0 <= j < n for j in j_cols):
        raise DimensionError("column selection out of range or repeated")
    if len(set(i_rows)) != len(i_rows) or any(not 0 <= i < a.rows for i in i_rows):
        raise DimensionError("row selection out of range or repeated")

    b = a.submatrix_rows(base_rows)
    d = det(b)
    if d == 0:
        raise SingularMatrixError("selected base rows are singular")
    k = len(i_rows)
    if k == 0:
        return True  # degenerate: both sides are |det B| / |det B|

    numerators = a.matmul(adjugate(b))
    lhs = Fraction(abs(det(numerators.submatrix(i_rows, j_cols))), abs(d) ** k)

    j_set = set(j_cols)
    mixed = [a.row(i) for i in i_rows]
    mixed.extend(b.row(p) for p in range(n) if p not in j_set)
    rhs = Fraction(abs(det(IntMatrix.from_rows(mixed))), abs(d))
    return lhs == rhs
