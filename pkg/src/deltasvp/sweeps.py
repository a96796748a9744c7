"""Seeded random property sweeps shared by the CLI and the test suite.

Each sweep draws instances from a fixed-size family with an explicit seed,
so a reported failure is reproducible from (seed, trial index) alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DomainError
from .generators import random_full_column_rank, random_full_row_rank
from .linalg import det, subdet_ratio_check
from .polyhedra import verify_kernel_identity


@dataclass(frozen=True)
class SweepReport:
    name: str
    trials: int
    failures: int
    first_failure: int | None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def lines(self) -> list[str]:
        out = [f"{self.name}: {self.trials} trials, {self.failures} failure(s)"]
        if self.first_failure is not None:
            out.append(f"  first failing trial index: {self.first_failure}")
        out.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return out


def ratio_identity_sweep(trials: int, seed: int) -> SweepReport:
    """Random determinant-ratio identity checks on small dense matrices.

    Matrices have up to 6 rows, 4 columns, entries in [-9, 9]; the base row
    set, row selection and column selection are drawn uniformly among the
    valid ones.
    """
    if trials < 1:
        raise DomainError("need at least one trial")
    rng = random.Random(seed)
    failures = 0
    first = None
    for trial in range(trials):
        n = rng.randint(1, 4)
        m = rng.randint(n, 6)
        a = random_full_column_rank(rng, m, n, -9, 9)
        while True:
            base = sorted(rng.sample(range(m), n))
            if det(a.submatrix_rows(base)) != 0:
                break
        k = rng.randint(1, n)
        i_rows = sorted(rng.sample(range(m), k))
        j_cols = sorted(rng.sample(range(n), k))
        if not subdet_ratio_check(a, base, i_rows, j_cols):
            failures += 1
            if first is None:
                first = trial
    return SweepReport("determinant-ratio identity", trials, failures, first)


def kernel_identity_sweep(trials: int, seed: int) -> SweepReport:
    """Random kernel-minor identity checks on full-row-rank matrices with
    up to 3 rows and 6 columns, entries in [-9, 9]."""
    if trials < 1:
        raise DomainError("need at least one trial")
    rng = random.Random(seed)
    failures = 0
    first = None
    for trial in range(trials):
        m = rng.randint(1, 3)
        n = rng.randint(m, 6)
        a = random_full_row_rank(rng, m, n, -9, 9)
        if not verify_kernel_identity(a):
            failures += 1
            if first is None:
                first = trial
    return SweepReport("kernel determinant identity", trials, failures, first)
