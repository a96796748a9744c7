"""Exact desk-scale polyhedral verifiers.

Verifies, on explicit bounded instances, the structural consequences of the
norm-1 threshold: integer-hull vertices sit on low-dimensional faces, and
standard-form integer programs admit optimal solutions of small support.
Everything runs on exact rationals; vertex candidates come from row-subset
enumeration, hull membership from a phase-1 simplex with Bland's rule, and
kernel lattice bases from the Hermite normal form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .errors import (
    BudgetExceededError,
    ContainmentError,
    DimensionError,
    DomainError,
    EmptyPolyhedronError,
    InvariantError,
    RankError,
    UnboundedPolyhedronError,
)
from .generators import sparsity_instance
from .linalg import (
    DEFAULT_MINOR_BUDGET,
    IntMatrix,
    det,
    gcd_full_rank_subdets,
    hnf,
    is_totally_delta_modular,
    rank,
)
from .threshold import dimension_threshold

RationalPoint = tuple[Fraction, ...]

DEFAULT_POINT_BUDGET = 10_000_000
MAX_VERTEX_DIMENSION = 5


@dataclass(frozen=True)
class PolyhedronH:
    """H-representation {x : A x <= b}."""

    a: IntMatrix
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.b) != self.a.rows:
            raise DimensionError("right-hand side length must match row count")

    @property
    def dim(self) -> int:
        return self.a.cols

    def contains(self, point: Sequence[int] | Sequence[Fraction]) -> bool:
        if len(point) != self.dim:
            raise DimensionError("point dimension mismatch")
        for row, bound in zip(self.a.entries, self.b):
            if sum(c * x for c, x in zip(row, point)) > bound:
                return False
        return True


@dataclass(frozen=True)
class StandardFormILP:
    """max c^T x subject to A x = b, x >= 0, x integer; A has full row rank."""

    a: IntMatrix
    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.b) != self.a.rows:
            raise DimensionError("right-hand side length must match row count")
        if len(self.c) != self.a.cols:
            raise DimensionError("objective length must match column count")
        if rank(self.a) != self.a.rows:
            raise RankError("constraint matrix must have full row rank")


def _basic_solutions(a: IntMatrix, b: Sequence[int]) -> list[RationalPoint]:
    """All solutions of A_I x = b_I over invertible n-row subsets I.

    Cramer's rule over Bareiss determinants: pure integer arithmetic until
    the final division.
    """
    m, n = a.rows, a.cols
    points = []
    for rows in combinations(range(m), n):
        sub = [a.entries[i] for i in rows]
        d = det(IntMatrix(tuple(sub)))
        if d == 0:
            continue
        rhs = [b[i] for i in rows]
        point = []
        for j in range(n):
            replaced = tuple(
                row[:j] + (rhs[i],) + row[j + 1 :] for i, row in enumerate(sub)
            )
            point.append(Fraction(det(IntMatrix(replaced)), d))
        points.append(tuple(point))
    return points


def _assert_bounded(p: PolyhedronH, budget: int) -> None:
    """Raises unless the recession cone {A x <= 0} is trivial.

    The cone is trivial iff its intersection with the unit box is {0};
    that intersection is a polytope, so it suffices to look at its vertices.
    """
    n = p.dim
    rows = list(p.a.entries)
    for i in range(n):
        unit = [0] * n
        unit[i] = 1
        rows.append(tuple(unit))
        rows.append(tuple(-x for x in unit))
    cone_box = IntMatrix.from_rows(rows)
    bounds = [0] * p.a.rows + [1] * (2 * n)
    if math.comb(cone_box.rows, n) > budget:
        raise BudgetExceededError("boundedness check exceeds the enumeration budget")
    for candidate in _basic_solutions(cone_box, bounds):
        if any(candidate):
            feasible = all(
                sum(c * x for c, x in zip(row, candidate)) <= bound
                for row, bound in zip(cone_box.entries, bounds)
            )
            if feasible:
                raise UnboundedPolyhedronError(
                    "polyhedron has a nonzero recession direction"
                )


def vertices_of_polyhedron(
    p: PolyhedronH, budget: int = DEFAULT_POINT_BUDGET
) -> list[RationalPoint]:
    """All vertices of a bounded nonempty polyhedron, sorted, exact.

    Enumerates invertible row subsets, solves exactly, and keeps feasible
    solutions.  Unbounded or empty input raises a typed error.
    """
    n = p.dim
    if n > MAX_VERTEX_DIMENSION:
        raise DimensionError(f"vertex enumeration supports at most {MAX_VERTEX_DIMENSION} dimensions")
    if math.comb(p.a.rows, n) > budget:
        raise BudgetExceededError("vertex enumeration exceeds the budget")
    _assert_bounded(p, budget)
    seen = set()
    for candidate in _basic_solutions(p.a, p.b):
        if p.contains(candidate):
            seen.add(candidate)
    if not seen:
        raise EmptyPolyhedronError("polyhedron contains no points")
    return sorted(seen)


def integer_points(p: PolyhedronH, budget: int = DEFAULT_POINT_BUDGET) -> list[tuple[int, ...]]:
    """All lattice points of a bounded polyhedron, by box scan, sorted."""
    vertices = vertices_of_polyhedron(p, budget)
    lows = [min(v[i] for v in vertices) for i in range(p.dim)]
    highs = [max(v[i] for v in vertices) for i in range(p.dim)]
    ranges = [range(math.ceil(lo), math.floor(hi) + 1) for lo, hi in zip(lows, highs)]
    size = math.prod(len(r) for r in ranges)
    if size > budget:
        raise BudgetExceededError(f"box scan of size {size} exceeds budget {budget}")
    return [point for point in product(*ranges) if p.contains(point)]


def _has_nonneg_combination(
    columns: list[tuple[Fraction, ...]], rhs: list[Fraction]
) -> bool:
    """Exact feasibility of {M lambda = rhs, lambda >= 0}.

    Phase-1 simplex over Fractions with Bland's rule on both the entering
    and the leaving choice, which guarantees termination.
    """
    r = len(rhs)
    v = len(columns)
    if v == 0:
        return not any(rhs)
    tableau: list[list[Fraction]] = []
    for i in range(r):
        row = [columns[j][i] for j in range(v)]
        row.extend(Fraction(int(i == t)) for t in range(r))
        row.append(rhs[i])
        if rhs[i] < 0:
            row = [-x for x in row]
        tableau.append(row)
    basis = [v + i for i in range(r)]
    width = v + r

    while True:
        entering = None
        for j in range(width):
            reduced = (1 if j >= v else 0) - sum(
                tableau[i][j] for i in range(r) if basis[i] >= v
            )
            if reduced < 0:
                entering = j
                break
        if entering is None:
            break
        leaving = None
        best_ratio = None
        for i in range(r):
            coeff = tableau[i][entering]
            if coeff > 0:
                ratio = tableau[i][-1] / coeff
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leaving])
                ):
                    best_ratio = ratio
                    leaving = i
        if leaving is None:
            raise InvariantError("phase-1 objective cannot be unbounded")
        pivot = tableau[leaving][entering]
        tableau[leaving] = [x / pivot for x in tableau[leaving]]
        for i in range(r):
            if i != leaving and tableau[i][entering] != 0:
                factor = tableau[i][entering]
                tableau[i] = [
                    x - factor * y for x, y in zip(tableau[i], tableau[leaving])
                ]
        basis[leaving] = entering

    infeasibility = sum(tableau[i][-1] for i in range(r) if basis[i] >= v)
    return infeasibility == 0


def integer_hull_vertices(
    p: PolyhedronH, budget: int = DEFAULT_POINT_BUDGET
) -> list[tuple[int, ...]]:
    """Vertices of the convex hull of the lattice points of P, sorted.

    A point stays iff it is not a convex combination of the other lattice
    points, decided exactly by rational phase-1 pivoting.
    """
    points = integer_points(p, budget)
    hull = []
    for v in points:
        others = [q for q in points if q != v]
        columns = [tuple(Fraction(x) for x in q) + (Fraction(1),) for q in others]
        rhs = [Fraction(x) for x in v] + [Fraction(1)]
        if not _has_nonneg_combination(columns, rhs):
            hull.append(v)
    return hull


def min_face_dimension(p: PolyhedronH, point: Sequence[int]) -> int:
    """Dimension of the smallest face of P containing the point.

    Equals dim minus the rank of the rows tight at the point; an interior
    point gives the full dimension.
    """
    if not p.contains(point):
        raise ContainmentError("point is not in the polyhedron")
    tight = [
        i
        for i, (row, bound) in enumerate(zip(p.a.entries, p.b))
        if sum(c * x for c, x in zip(row, point)) == bound
    ]
    if not tight:
        return p.dim
    return p.dim - rank(p.a.submatrix_rows(tight))


@dataclass(frozen=True)
class FaceDimensionReport:
    """Per-vertex face dimensions of the integer hull against the bound."""

    delta: int
    bound: int
    entries: tuple[tuple[tuple[int, ...], int], ...]
    passed: bool

    def lines(self) -> list[str]:
        out = [
            f"face-dimension bound for delta={self.delta}: "
            f"dimensions must be <= {self.bound}"
        ]
        for vertex, dim in self.entries:
            verdict = "ok" if dim <= self.bound else "VIOLATION"
            out.append(f"  hull vertex {list(vertex)}: face dimension {dim} [{verdict}]")
        out.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return out


def verify_face_dimension_bound(
    p: PolyhedronH, delta: int, budget: int = DEFAULT_POINT_BUDGET
) -> FaceDimensionReport:
    """Checks every integer-hull vertex sits on a face of dimension at most
    the threshold bound for delta.  The caller vouches that the matrix of P
    is delta-modular; a failing report on certified input is build-breaking.
    """
    bound = dimension_threshold(delta)
    entries = []
    for vertex in integer_hull_vertices(p, budget):
        entries.append((vertex, min_face_dimension(p, vertex)))
    passed = all(dim <= bound for _, dim in entries)
    return FaceDimensionReport(delta, bound, tuple(entries), passed)


def kernel_lattice_basis(a: IntMatrix) -> IntMatrix:
    """Basis of the integer kernel lattice {x integer : A x = 0}.

    Taken from the unimodular transform of the Hermite normal form: the
    columns mapped to zero columns span exactly the kernel lattice.  The
    result W satisfies A @ W == 0 and has coprime maximal minors.
    """
    m, n = a.rows, a.cols
    if m >= n:
        raise DimensionError("kernel lattice is trivial unless rows < cols")
    if rank(a) != m:
        raise RankError("full row rank required")
    h, u = hnf(a)
    zero_cols = [j for j in range(n) if not any(h.column(j))]
    if len(zero_cols) != n - m:
        raise InvariantError("kernel dimension mismatch")
    w = u.submatrix(range(n), zero_cols)
    if any(any(row) for row in a.matmul(w).entries):
        raise InvariantError("kernel basis does not annihilate A")
    return w


def verify_kernel_identity(a: IntMatrix, budget: int = DEFAULT_MINOR_BUDGET) -> bool:
    """Exact cross-check of maximal minors of A against those of its kernel
    basis: for every column set I of size m, |det A_{.,I}| / gcd(A) equals
    |det W_{complement,.}| / gcd(W).
    """
    m, n = a.rows, a.cols
    if rank(a) != m:
        raise RankError("full row rank required")
    if m == n:
        return True  # trivial kernel: both sides reduce to 1
    w = kernel_lattice_basis(a)
    g_a = gcd_full_rank_subdets(a, budget)
    g_w = gcd_full_rank_subdets(w.transpose(), budget)
    if math.comb(n, m) > budget:
        raise BudgetExceededError("column subset scan exceeds budget")
    for cols in combinations(range(n), m):
        complement = [j for j in range(n) if j not in cols]
        lhs = Fraction(abs(det(a.submatrix(range(m), cols))), g_a)
        rhs = Fraction(abs(det(w.submatrix(complement, range(n - m)))), g_w)
        if lhs != rhs:
            return False
    return True


def solve_standard_form_ilp(
    ilp: StandardFormILP,
    box: Sequence[int],
    budget: int = DEFAULT_POINT_BUDGET,
) -> list[tuple[int, ...]]:
    """All optimal solutions of the program within the given box, by
    complete enumeration of 0 <= x <= box.  Empty list means infeasible in
    the box; the caller owns box completeness.
    """
    if len(box) != ilp.a.cols:
        raise DimensionError("box length must match variable count")
    if any(x < 0 for x in box):
        raise DomainError("box entries must be nonnegative")
    size = math.prod(x + 1 for x in box)
    if size > budget:
        raise BudgetExceededError(f"ILP scan of size {size} exceeds budget {budget}")
    best_value: int | None = None
    best: list[tuple[int, ...]] = []
    for x in product(*(range(b + 1) for b in box)):
        if ilp.a.matvec(x) != ilp.b:
            continue
        value = sum(ci * xi for ci, xi in zip(ilp.c, x))
        if best_value is None or value > best_value:
            best_value = value
            best = [x]
        elif value == best_value:
            best.append(x)
    return best


def support_size(x: Sequence[int]) -> int:
    return sum(1 for value in x if value != 0)


@dataclass(frozen=True)
class SupportReport:
    """Minimum optimal-solution support against m plus the threshold bound."""

    delta: int
    bound: int
    optimal_value: int | None
    min_support: int | None
    optimizer_count: int
    passed: bool

    def lines(self) -> list[str]:
        out = [f"support bound for delta={self.delta}: min support must be <= {self.bound}"]
        if self.min_support is None:
            out.append("  infeasible within the box (vacuously fine)")
        else:
            out.append(
                f"  optimal value {self.optimal_value}, "
                f"{self.optimizer_count} optimizer(s), min support {self.min_support}"
            )
        out.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return out


def verify_support_bound(
    ilp: StandardFormILP,
    delta: int,
    box: Sequence[int],
    budget: int = DEFAULT_POINT_BUDGET,
) -> SupportReport:
    """Checks some optimal solution has support at most m plus the
    threshold bound for delta (vacuous when infeasible in the box)."""
    bound = ilp.a.rows + dimension_threshold(delta)
    optimizers = solve_standard_form_ilp(ilp, box, budget)
    if not optimizers:
        return SupportReport(delta, bound, None, None, 0, True)
    value = sum(ci * xi for ci, xi in zip(ilp.c, optimizers[0]))
    smallest = min(support_size(x) for x in optimizers)
    return SupportReport(delta, bound, value, smallest, len(optimizers), smallest <= bound)


def derive_box(a: IntMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """Per-variable upper bounds implied by A x = b, x >= 0, by iterated
    interval propagation over the rows.  Returns None when some variable
    stays unbounded by this reasoning.
    """
    m, n = a.rows, a.cols
    upper: list[int | None] = [None] * n
    for _ in range(n + 1):
        changed = False
        for i in range(m):
            row = a.row(i)
            for j in range(n):
                if row[j] <= 0:
                    continue
                slack = b[i]
                ok = True
                for t in range(n):
                    if t == j or row[t] == 0:
                        continue
                    if row[t] < 0:
                        if upper[t] is None:
                            ok = False
                            break
                        slack -= row[t] * upper[t]
                if not ok:
                    continue
                candidate = max(slack // row[j], 0)
                if upper[j] is None or candidate < upper[j]:
                    upper[j] = candidate
                    changed = True
        if not changed:
            break
    if any(u is None for u in upper):
        return None
    return tuple(u for u in upper if u is not None)


@dataclass(frozen=True)
class SparsityReport:
    """Uniqueness and support of the explicit dense-support construction."""

    delta: int
    m: int
    n: int
    box: tuple[int, ...]
    solutions: tuple[tuple[int, ...], ...]
    support: int | None
    expected_support: int
    totally_modular: bool
    passed: bool

    def lines(self) -> list[str]:
        out = [
            f"dense-support construction for delta={self.delta}: "
            f"{self.m} equations, {self.n} variables",
            f"  derived enumeration box: {list(self.box)}",
            f"  nonnegative integer solutions found: {len(self.solutions)}",
        ]
        if self.support is not None:
            out.append(
                f"  unique solution support {self.support} "
                f"(expected {self.expected_support})"
            )
        out.append(f"  totally {self.delta}-modular: {self.totally_modular}")
        out.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return out


def verify_sparsity_construction(
    delta: int,
    budget: int = DEFAULT_POINT_BUDGET,
    minor_budget: int = DEFAULT_MINOR_BUDGET,
) -> SparsityReport:
    """Full check of the dense-support construction for small delta.

    Derives complete per-variable bounds from the equations, enumerates all
    nonnegative integer solutions, and confirms the all-ones vector is the
    only one, so every objective has minimum support m + delta - 1.  Also
    confirms total delta-modularity by exhaustive minor enumeration.
    """
    if not 2 <= delta <= 3:
        raise DomainError("supported range is delta in {2, 3} at desk scale")
    a, b = sparsity_instance(delta)
    box = derive_box(a, b)
    if box is None:
        raise InvariantError("construction rows must bound every variable")
    objective = tuple([0] * a.cols)
    ilp = StandardFormILP(a, b, objective)
    solutions = tuple(solve_standard_form_ilp(ilp, box, budget))
    all_ones = tuple([1] * a.cols)
    unique = solutions == (all_ones,)
    support = support_size(solutions[0]) if len(solutions) == 1 else None
    totally = is_totally_delta_modular(a, delta, minor_budget)
    expected = a.rows + delta - 1
    passed = unique and support == expected and totally
    return SparsityReport(
        delta, a.rows, a.cols, box, solutions, support, expected, totally, passed
    )
