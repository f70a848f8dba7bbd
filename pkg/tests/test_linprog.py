"""Exact simplex feasibility tests, fuzzed against a dense Fraction tableau."""

import random
from fractions import Fraction

from tameideal.linprog import feasible_eq_nonneg, solve_eq_nonneg


def _reference(rows, rhs):
    """Plain Fraction-tableau phase-1 simplex, kept deliberately simple."""
    m, cols = len(rows), len(rows[0])
    tab = []
    for i in range(m):
        row = [Fraction(v) for v in rows[i]] + [Fraction(rhs[i])]
        if row[-1] < 0:
            row = [-v for v in row]
        tab.append(row)
    cost = [Fraction(0)] * (cols + 1)
    for i in range(m):
        for j in range(cols + 1):
            cost[j] -= tab[i][j]
    basis = [cols + i for i in range(m)]
    while True:
        enter = next((j for j in range(cols) if cost[j] < 0), -1)
        if enter < 0:
            break
        leave, best = -1, None
        for i in range(m):
            if tab[i][enter] > 0:
                r = tab[i][-1] / tab[i][enter]
                if best is None or r < best or (r == best and basis[i] < basis[leave]):
                    best, leave = r, i
        assert leave >= 0
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [v - f * w for v, w in zip(tab[i], tab[leave])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [v - f * w for v, w in zip(cost, tab[leave])]
        basis[leave] = enter
    return cost[-1] == 0


def test_simple_feasible_system():
    sol = solve_eq_nonneg([[1, 1], [1, -1]], [2, 0])
    assert sol == [Fraction(1), Fraction(1)]


def test_simple_infeasible_system():
    # x1 + x2 = -1 has no nonnegative solution
    assert solve_eq_nonneg([[1, 1]], [-1]) is None


def test_fractional_data():
    sol = solve_eq_nonneg([[Fraction(1, 2), 1]], [Fraction(3, 2)])
    assert sol is not None
    assert Fraction(1, 2) * sol[0] + sol[1] == Fraction(3, 2)


def test_degenerate_zero_rhs():
    sol = solve_eq_nonneg([[1, -1]], [0])
    assert sol == [Fraction(0), Fraction(0)]


def test_fuzz_against_reference():
    rng = random.Random(7)
    for _ in range(1500):
        m = rng.randint(1, 5)
        cols = rng.randint(1, 7)
        rows = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(m)]
        rhs = [rng.randint(-6, 6) for _ in range(m)]
        got = solve_eq_nonneg(rows, rhs)
        assert (got is not None) == _reference(rows, rhs)
        if got is not None:
            assert all(v >= 0 for v in got)
            for i in range(m):
                assert sum(Fraction(rows[i][j]) * got[j] for j in range(cols)) == rhs[i]


def test_feasible_wrapper():
    assert feasible_eq_nonneg([[2, 3]], [6])
    assert not feasible_eq_nonneg([[2, 0]], [-1])
