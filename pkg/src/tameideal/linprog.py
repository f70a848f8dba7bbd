"""Exact rational feasibility of A x = b, x >= 0, by phase-1 simplex.

Exact arithmetic without tolerances: rows are stored as integer numerator
vectors with one positive denominator each, so pivoting is pure integer work
(cross-multiplication plus a gcd sweep) and feasible systems yield an exact
Fraction solution.  Bland's rule (smallest eligible index enters, smallest
basis index leaves on ties) guarantees termination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def _reduce_row(nums: list[int], den: int) -> tuple[list[int], int]:
    g = den
    for v in nums:
        g = gcd(g, v)
        if g == 1:
            return nums, den
    return [v // g for v in nums], den // g


def solve_eq_nonneg(
    rows: Sequence[Sequence[int | Fraction]],
    rhs: Sequence[int | Fraction],
) -> list[Fraction] | None:
    """Return some x >= 0 with A x = b, or None if no such x exists."""
    m = len(rows)
    cols = len(rows[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * cols

    nums: list[list[int]] = []
    dens: list[int] = []
    for i in range(m):
        entries = [Fraction(v) for v in rows[i]] + [Fraction(rhs[i])]
        den = 1
        for f in entries:
            den = den * f.denominator // gcd(den, f.denominator)
        row = [int(f * den) for f in entries]
        if row[-1] < 0:
            row = [-v for v in row]
        nums.append(row)
        dens.append(den)

    # Phase-1 objective: minimize the sum of artificial variables.  The
    # artificial columns form an identity and never re-enter once they leave,
    # so only the original columns are kept explicitly.
    cost_den = 1
    for d in dens:
        cost_den = cost_den * d // gcd(cost_den, d)
    cost = [0] * (cols + 1)
    for i in range(m):
        f = cost_den // dens[i]
        row = nums[i]
        for j in range(cols + 1):
            cost[j] -= f * row[j]
    basis = [cols + i for i in range(m)]  # indices >= cols mark artificials

    while True:
        enter = -1
        for j in range(cols):
            if cost[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        for i in range(m):
            if nums[i][enter] > 0:
                if leave < 0:
                    leave = i
                    continue
                lhs = nums[i][-1] * nums[leave][enter]
                rhs_ = nums[leave][-1] * nums[i][enter]
                if lhs < rhs_ or (lhs == rhs_ and basis[i] < basis[leave]):
                    leave = i
        # The phase-1 objective is bounded below by zero, so an improving
        # column always admits a pivot row.
        assert leave >= 0, "unbounded phase-1 column"
        piv_row = nums[leave]
        pe = piv_row[enter]
        for i in range(m):
            if i != leave and nums[i][enter] != 0:
                f = nums[i][enter]
                row = nums[i]
                nums[i] = [v * pe - f * w for v, w in zip(row, piv_row)]
                nums[i], dens[i] = _reduce_row(nums[i], dens[i] * pe)
        if cost[enter] != 0:
            f = cost[enter]
            cost = [v * pe - f * w for v, w in zip(cost, piv_row)]
            cost, cost_den = _reduce_row(cost, cost_den * pe)
        # New pivot row is the old one rescaled by 1/T[leave][enter].
        nums[leave], dens[leave] = _reduce_row(piv_row, pe)
        basis[leave] = enter

    if cost[-1] != 0:  # residual artificial mass: infeasible
        return None
    x = [Fraction(0)] * cols
    for i, b in enumerate(basis):
        if b < cols:
            x[b] = Fraction(nums[i][-1], dens[i])
    for i in range(m):
        total = sum(Fraction(rows[i][j]) * x[j] for j in range(cols))
        assert total == Fraction(rhs[i]), "simplex solution failed exact replay"
    return x


def feasible_eq_nonneg(
    rows: Sequence[Sequence[int | Fraction]],
    rhs: Sequence[int | Fraction],
) -> bool:
    return solve_eq_nonneg(rows, rhs) is not None
