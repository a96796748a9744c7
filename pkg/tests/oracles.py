"""Independent oracles for the test suite.

Deliberately separate implementations: cofactor expansion for determinants
and adjugates, Fraction-based elimination for rank, and a plain full box
scan for minimum norms.  Nothing here may call the implementation paths it
is used to check.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from deltasvp.linalg import IntMatrix


def cofactor_det(entries) -> int:
    rows = [tuple(r) for r in entries]
    n = len(rows)
    assert all(len(r) == n for r in rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [tuple(r[t] for t in range(n) if t != j) for r in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        total += term if j % 2 == 0 else -term
    return total


def cofactor_adjugate(entries) -> tuple[tuple[int, ...], ...]:
    rows = [tuple(r) for r in entries]
    n = len(rows)
    if n == 1:
        return ((1,),)
    out = []
    for i in range(n):
        line = []
        for j in range(n):
            minor = [
                tuple(rows[r][c] for c in range(n) if c != i)
                for r in range(n)
                if r != j
            ]
            value = cofactor_det(minor)
            line.append(value if (i + j) % 2 == 0 else -value)
        out.append(tuple(line))
    return tuple(out)


def fraction_rank(entries) -> int:
    work = [[Fraction(x) for x in row] for row in entries]
    n_rows = len(work)
    n_cols = len(work[0])
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        lead = work[r][c]
        work[r] = [x / lead for x in work[r]]
        for i in range(n_rows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == n_rows:
            break
    return r


def box_min_norm(entries, k: int) -> int:
    """Minimum of ||A z||_inf over nonzero z in [-k, k]^n, full scan."""
    rows = [tuple(r) for r in entries]
    n = len(rows[0])
    best = None
    for z in product(range(-k, k + 1), repeat=n):
        if not any(z):
            continue
        norm = max(abs(sum(a * b for a, b in zip(row, z))) for row in rows)
        if best is None or norm < best:
            best = norm
    assert best is not None
    return best


def convex_hull_2d(points) -> list[tuple[int, int]]:
    """Vertices of the convex hull of 2-D integer points, by monotone
    chain with exact integer cross products.  Collinear boundary points are
    dropped, so the result is exactly the vertex set, sorted."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def half(sequence):
        chain = []
        for p in sequence:
            while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return sorted(set(lower[:-1] + upper[:-1]))


def assert_hnf_shape(h: IntMatrix) -> None:
    """Lower-triangular profile: pivot rows strictly increase, pivots are
    positive, entries left of a pivot in its row lie in [0, pivot), zero
    columns trail."""
    pivot_rows = []
    seen_zero_column = False
    for j in range(h.cols):
        column = h.column(j)
        nonzero = [i for i, x in enumerate(column) if x != 0]
        if not nonzero:
            seen_zero_column = True
            continue
        assert not seen_zero_column, "zero columns must trail"
        top = nonzero[0]
        assert column[top] > 0, "pivot must be positive"
        if pivot_rows:
            assert top > pivot_rows[-1], "pivot rows must strictly increase"
        pivot_rows.append(top)
        pivot = column[top]
        for j_left in range(j):
            assert 0 <= h.entries[top][j_left] < pivot, "left entries must be reduced"


def assert_same_column_lattice(a: IntMatrix, h: IntMatrix, u: IntMatrix) -> None:
    """Columns of A and of H generate the same lattice, certified by U."""
    assert a.matmul(u).entries == h.entries
    d = cofactor_det(u.entries)
    assert abs(d) == 1, "transform must be unimodular"
    u_inverse_rows = [
        tuple(d * x for x in row) for row in cofactor_adjugate(u.entries)
    ]
    u_inverse = IntMatrix.from_rows(u_inverse_rows)
    assert h.matmul(u_inverse).entries == a.entries
