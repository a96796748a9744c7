import random
from fractions import Fraction

import pytest

from deltasvp.errors import (
    BudgetExceededError,
    ContainmentError,
    DimensionError,
    DomainError,
    EmptyPolyhedronError,
    RankError,
    UnboundedPolyhedronError,
)
from deltasvp.generators import (
    lower_bound_instance,
    random_delta_modular,
    random_full_row_rank,
    sparsity_instance,
)
from deltasvp.linalg import IntMatrix, gcd_full_rank_subdets, max_abs_full_rank_subdet
from deltasvp.polyhedra import (
    PolyhedronH,
    StandardFormILP,
    derive_box,
    integer_hull_vertices,
    integer_points,
    kernel_lattice_basis,
    min_face_dimension,
    solve_standard_form_ilp,
    verify_face_dimension_bound,
    verify_kernel_identity,
    verify_sparsity_construction,
    verify_support_bound,
    vertices_of_polyhedron,
)

M = IntMatrix.from_rows


def box_polyhedron(n, radius=1):
    rows = []
    for i in range(n):
        unit = [0] * n
        unit[i] = 1
        rows.append(tuple(unit))
        rows.append(tuple(-x for x in unit))
    return PolyhedronH(M(rows), tuple([radius] * 2 * n))


UNIT_SQUARE = PolyhedronH(M([[1, 0], [0, 1], [-1, 0], [0, -1]]), (1, 1, 0, 0))


class TestVertices:
    def test_unit_square(self):
        vertices = vertices_of_polyhedron(UNIT_SQUARE)
        assert len(vertices) == 4
        assert (Fraction(1), Fraction(1)) in vertices

    def test_simplex(self):
        p = PolyhedronH(M([[1, 1], [-1, 0], [0, -1]]), (1, 0, 0))
        assert vertices_of_polyhedron(p) == [
            (Fraction(0), Fraction(0)),
            (Fraction(0), Fraction(1)),
            (Fraction(1), Fraction(0)),
        ]

    def test_fractional_vertices(self):
        p = PolyhedronH(M([[2, 0], [-2, 0], [0, 1], [0, -1]]), (1, 1, 1, 1))
        vertices = vertices_of_polyhedron(p)
        assert (Fraction(1, 2), Fraction(1)) in vertices

    def test_unbounded_rejected(self):
        with pytest.raises(UnboundedPolyhedronError):
            vertices_of_polyhedron(PolyhedronH(M([[1, 0], [0, 1]]), (1, 1)))

    def test_empty_rejected(self):
        p = PolyhedronH(M([[1, 0], [-1, 0], [0, 1], [0, -1]]), (-1, 0, 1, 1))
        with pytest.raises(EmptyPolyhedronError):
            vertices_of_polyhedron(p)

    def test_dimension_cap(self):
        with pytest.raises(DimensionError):
            vertices_of_polyhedron(box_polyhedron(6))

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            vertices_of_polyhedron(box_polyhedron(3), budget=5)


class TestIntegerPoints:
    def test_unit_square(self):
        assert len(integer_points(UNIT_SQUARE)) == 4

    def test_symmetric_box(self):
        assert len(integer_points(box_polyhedron(2))) == 9

    def test_small_simplex(self):
        p = PolyhedronH(M([[2, 2], [-1, 0], [0, -1]]), (3, 0, 0))
        assert integer_points(p) == [(0, 0), (0, 1), (1, 0)]

    def test_no_interior_integer_point_in_certified_instance(self):
        a = lower_bound_instance(3)
        rows = list(a.entries) + [tuple(-x for x in row) for row in a.entries]
        p = PolyhedronH(M(rows), tuple([1] * 6))
        assert integer_points(p) == [(0, 0)]


class TestIntegerHull:
    def test_box_corners(self):
        assert integer_hull_vertices(box_polyhedron(2)) == [
            (-1, -1),
            (-1, 1),
            (1, -1),
            (1, 1),
        ]

    def test_collinear_segment_keeps_endpoints(self):
        p = PolyhedronH(
            M([[1, -1], [-1, 1], [1, 0], [-1, 0]]), (0, 0, 2, 0)
        )  # segment from (0,0) to (2,2)
        assert integer_hull_vertices(p) == [(0, 0), (2, 2)]

    def test_shaved_simplex(self):
        p = PolyhedronH(M([[2, 2], [-1, 0], [0, -1]]), (3, 0, 0))
        assert integer_hull_vertices(p) == [(0, 0), (0, 1), (1, 0)]

    def test_matches_monotone_chain_oracle(self):
        from oracles import convex_hull_2d

        rng = random.Random(2718)
        done = 0
        while done < 25:
            rows = [
                (rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(rng.randint(3, 5))
            ]
            stacked = rows + [(-a, -b) for a, b in rows]
            matrix = M(stacked)
            try:
                if max_abs_full_rank_subdet(matrix)[0] < 1:
                    continue
            except RankError:
                continue
            b = tuple(rng.randint(1, 4) for _ in stacked)
            p = PolyhedronH(matrix, b)
            points = integer_points(p, budget=20_000)
            if len(points) > 50:
                continue
            assert integer_hull_vertices(p) == convex_hull_2d(points)
            done += 1


class TestMinFaceDimension:
    def test_corner(self):
        assert min_face_dimension(box_polyhedron(2), (1, 1)) == 0

    def test_edge_midpoint(self):
        assert min_face_dimension(box_polyhedron(2), (1, 0)) == 1

    def test_interior(self):
        assert min_face_dimension(box_polyhedron(2), (0, 0)) == 2

    def test_outside_rejected(self):
        with pytest.raises(ContainmentError):
            min_face_dimension(box_polyhedron(2), (3, 0))

    def test_vertex_iff_dimension_zero(self):
        p = PolyhedronH(M([[2, 2], [-1, 0], [0, -1]]), (3, 0, 0))
        vertices = set(vertices_of_polyhedron(p))
        for point in integer_points(p):
            expected = tuple(Fraction(x) for x in point) in vertices
            assert (min_face_dimension(p, point) == 0) == expected


class TestFaceDimensionBound:
    def test_unimodular_hull_vertices_are_vertices(self):
        report = verify_face_dimension_bound(box_polyhedron(2), 1)
        assert report.passed
        assert report.bound == 0
        assert all(dim == 0 for _, dim in report.entries)

    def test_certified_instance_with_interior_origin(self):
        a = lower_bound_instance(3)
        rows = list(a.entries) + [tuple(-x for x in row) for row in a.entries]
        p = PolyhedronH(M(rows), tuple([1] * 6))
        report = verify_face_dimension_bound(p, 3)
        assert report.passed
        assert report.entries == (((0, 0), 2),)

    def test_violation_reported(self):
        # a segment with a strictly interior lattice-free stretch: the only
        # integer point (0) sits inside a 1-face, violating a delta=1 claim
        p = PolyhedronH(M([[2], [-2]]), (1, 1))
        report = verify_face_dimension_bound(p, 1)
        assert not report.passed
        assert report.bound == 0


class TestKernelLatticeBasis:
    def test_sum_constraint(self):
        w = kernel_lattice_basis(M([[1, 1]]))
        assert w.entries in (((1,), (-1,)), ((-1,), (1,)))

    def test_scaled_constraint(self):
        w = kernel_lattice_basis(M([[2, 4]]))
        assert w.entries in (((2,), (-1,)), ((-2,), (1,)))

    def test_three_ones(self):
        a = M([[1, 1, 1]])
        w = kernel_lattice_basis(a)
        assert all(all(x == 0 for x in row) for row in a.matmul(w).entries)
        assert gcd_full_rank_subdets(w.transpose()) == 1

    def test_random_bases_are_primitive(self):
        rng = random.Random(88)
        for _ in range(30):
            m = rng.randint(1, 3)
            n = rng.randint(m + 1, 6)
            a = random_full_row_rank(rng, m, n, -9, 9)
            w = kernel_lattice_basis(a)
            assert w.shape == (n, n - m)
            assert all(all(x == 0 for x in row) for row in a.matmul(w).entries)
            assert gcd_full_rank_subdets(w.transpose()) == 1

    def test_square_rejected(self):
        with pytest.raises(DimensionError):
            kernel_lattice_basis(IntMatrix.identity(2))

    def test_rank_deficient_rejected(self):
        with pytest.raises(RankError):
            kernel_lattice_basis(M([[1, 1, 0], [1, 1, 0]]))


class TestKernelIdentity:
    def test_sum_row(self):
        assert verify_kernel_identity(M([[1, 1]]))

    def test_gcd_two(self):
        assert verify_kernel_identity(M([[2, 4]]))

    def test_wide_random(self):
        rng = random.Random(99)
        for _ in range(40):
            a = random_full_row_rank(rng, 2, 4, -9, 9)
            assert verify_kernel_identity(a)

    def test_square_is_trivial(self):
        assert verify_kernel_identity(IntMatrix.identity(3))


class TestStandardFormIlp:
    def test_unique_optimum(self):
        ilp = StandardFormILP(M([[1, 1]]), (2,), (1, 0))
        assert solve_standard_form_ilp(ilp, (2, 2)) == [(2, 0)]

    def test_sparsity_instance_is_rigid(self):
        a, b = sparsity_instance(2)
        ilp = StandardFormILP(a, b, (0, 0, 0))
        assert solve_standard_form_ilp(ilp, (2, 2, 2)) == [(1, 1, 1)]

    def test_all_optimizers_returned(self):
        ilp = StandardFormILP(M([[1, 1]]), (2,), (1, 1))
        assert solve_standard_form_ilp(ilp, (2, 2)) == [(0, 2), (1, 1), (2, 0)]

    def test_infeasible_empty(self):
        ilp = StandardFormILP(M([[2, 2]]), (3,), (1, 0))
        assert solve_standard_form_ilp(ilp, (1, 1)) == []

    def test_budget(self):
        ilp = StandardFormILP(M([[1, 1]]), (2,), (1, 0))
        with pytest.raises(BudgetExceededError):
            solve_standard_form_ilp(ilp, (9, 9), budget=10)

    def test_rank_validated(self):
        with pytest.raises(RankError):
            StandardFormILP(M([[1, 1], [1, 1]]), (2, 2), (1, 0))


class TestSupportBound:
    def test_sparsity_instance_meets_bound_exactly(self):
        a, b = sparsity_instance(2)
        report = verify_support_bound(StandardFormILP(a, b, (1, 1, 1)), 2, (2, 2, 2))
        assert report.passed
        assert report.min_support == 3
        assert report.bound == 3

    def test_network_flow_instances(self):
        # totally unimodular constraints: optimal support stays within m
        rng = random.Random(2023)
        from deltasvp.generators import complete_digraph_incidence

        t = complete_digraph_incidence(3, ordered=False).transpose()  # 3 x 3
        for _ in range(10):
            b = t.matvec([rng.randint(0, 2) for _ in range(3)])
            c = tuple(rng.randint(-2, 2) for _ in range(3))
            ilp_rows = [list(r) for r in t.entries[:-1]]  # drop a row: full row rank
            ilp = StandardFormILP(M(ilp_rows), b[:-1], c)
            report = verify_support_bound(ilp, 1, (4, 4, 4))
            assert report.passed

    def test_infeasible_is_vacuous(self):
        report = verify_support_bound(
            StandardFormILP(M([[2, 2]]), (3,), (1, 0)), 1, (1, 1)
        )
        assert report.passed
        assert report.min_support is None


class TestDeriveBox:
    def test_sparsity_boxes(self):
        a2, b2 = sparsity_instance(2)
        assert derive_box(a2, b2) == (2, 2, 1)
        a3, b3 = sparsity_instance(3)
        assert derive_box(a3, b3) == (2, 2, 2, 2, 3, 3, 1)

    def test_underivable(self):
        assert derive_box(M([[1, -1]]), (0,)) is None


class TestSparsityConstruction:
    def test_delta_two(self):
        report = verify_sparsity_construction(2)
        assert report.passed
        assert report.solutions == ((1, 1, 1),)
        assert report.support == 3 == report.expected_support
        assert report.totally_modular

    def test_delta_three(self):
        report = verify_sparsity_construction(3)
        assert report.passed
        assert report.solutions == (tuple([1] * 7),)
        assert report.support == 7 == report.expected_support

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            verify_sparsity_construction(4)


class TestRandomModularPolytopes:
    def test_face_dimensions_within_bound(self):
        rng = random.Random(31415)
        done = 0
        while done < 12:
            delta = rng.randint(1, 3)
            n = rng.randint(2, 3)
            m = n + rng.randint(0, 2)
            a = random_delta_modular(delta, m, n, rng.randrange(2**32))
            rows = list(a.entries) + [tuple(-x for x in row) for row in a.entries]
            stacked = M(rows)
            if max_abs_full_rank_subdet(stacked)[0] != delta:
                continue
            b = tuple(rng.randint(0, 3) for _ in range(2 * m))
            p = PolyhedronH(stacked, b)
            report = verify_face_dimension_bound(p, delta)
            assert report.passed
            if delta == 1:
                assert all(dim == 0 for _, dim in report.entries)
            done += 1
