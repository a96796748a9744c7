import random

import pytest

from deltasvp.errors import BudgetExceededError, DomainError, RankError
from deltasvp.generators import lower_bound_instance, random_full_column_rank
from deltasvp.linalg import IntMatrix
from deltasvp.oracle import (
    brute_force_svp,
    certifies_lower_bound,
    enum_bound,
    shortest_is_at_least_2,
)

from oracles import box_min_norm

M = IntMatrix.from_rows

WORKED = M([[1, 0], [1, 2], [2, 2]])


class TestEnumBound:
    def test_identity(self):
        assert enum_bound(IntMatrix.identity(3)) == 1

    def test_worked_value(self):
        # best column norm 2, basis rows (0, 1) with det 3, adjugate row
        # 1-norms 3 and 2, so the radius is max(2*3, 2*2) // 3 = 2
        assert enum_bound(M([[-1, -3], [1, 0], [2, 3]])) == 2

    def test_unit_column_means_norm_one(self):
        a = M([[1, 2], [0, 3], [0, 1]])
        assert brute_force_svp(a, enum_bound(a)).norm == 1

    def test_rank_deficient(self):
        with pytest.raises(RankError):
            enum_bound(M([[1, 2], [2, 4]]))


class TestBruteForceSvp:
    def test_identity_box(self):
        result = brute_force_svp(IntMatrix.identity(2), 1)
        assert result.norm == 1
        # lexicographically smallest minimizer, scanning most negative first
        assert result.z == (-1, -1)

    def test_lower_bound_instance(self):
        result = brute_force_svp(lower_bound_instance(3), 2)
        assert result.norm == 2
        assert result.z == (-2, 1)
        assert result.y == (-1, -2, -1)

    def test_worked_example(self):
        result = brute_force_svp(WORKED, 2)
        assert result.norm == 1
        assert result.z == (-1, 1)

    def test_bad_radius(self):
        with pytest.raises(DomainError):
            brute_force_svp(WORKED, 0)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            brute_force_svp(WORKED, 100, budget=1000)

    def test_agrees_with_independent_scan(self):
        rng = random.Random(31)
        for _ in range(25):
            n = rng.randint(1, 3)
            a = random_full_column_rank(rng, rng.randint(n, n + 2), n, -5, 5)
            k = rng.randint(1, 2)
            assert brute_force_svp(a, k).norm == box_min_norm(a.entries, k)

    def test_radius_is_sufficient(self):
        # growing the box beyond the derived radius never improves the norm
        rng = random.Random(77)
        done = 0
        while done < 30:
            n = rng.randint(1, 4)
            a = random_full_column_rank(rng, rng.randint(n, n + 2), n, -9, 9)
            k = enum_bound(a)
            if (2 * (k + 2) + 1) ** n > 200_000:
                continue
            assert brute_force_svp(a, k).norm == box_min_norm(a.entries, k + 2)
            done += 1


class TestShortestIsAtLeast2:
    def test_identity_has_witness(self):
        decided, witness = shortest_is_at_least_2(IntMatrix.identity(3))
        assert not decided
        assert witness == (-1, -1, -1)

    @pytest.mark.parametrize("delta", [2, 3, 4, 5])
    def test_lower_bound_instances(self, delta):
        decided, witness = shortest_is_at_least_2(lower_bound_instance(delta))
        assert decided and witness is None

    def test_worked_example_witness(self):
        decided, witness = shortest_is_at_least_2(WORKED)
        assert not decided
        assert witness == (-1, 1)
        assert max(abs(x) for x in WORKED.matvec(witness)) == 1

    def test_agrees_with_box_enumeration(self):
        rng = random.Random(13)
        done = 0
        while done < 25:
            n = rng.randint(1, 3)
            a = random_full_column_rank(rng, rng.randint(n, n + 2), n, -4, 4)
            k = enum_bound(a)
            if (2 * k + 1) ** n > 200_000:
                continue
            decided, _ = shortest_is_at_least_2(a)
            assert decided == (box_min_norm(a.entries, k) >= 2)
            done += 1

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            shortest_is_at_least_2(WORKED, budget=8)


class TestCertifiesLowerBound:
    @pytest.mark.parametrize("delta", [2, 3, 4, 5])
    def test_constructions_certify(self, delta):
        assert certifies_lower_bound(lower_bound_instance(delta), delta)

    def test_identity_does_not(self):
        assert not certifies_lower_bound(IntMatrix.identity(2), 1)

    def test_short_vector_disqualifies(self):
        assert not certifies_lower_bound(WORKED, 2)

    def test_wrong_delta_disqualifies(self):
        assert not certifies_lower_bound(lower_bound_instance(3), 2)
