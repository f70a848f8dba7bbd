"""Shared instance generators for the test suite."""

from __future__ import annotations

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from tameideal.core import Monomial, MonomialIdeal


def ideal_from_graph(n: int, loops, edges) -> MonomialIdeal:
    """Edge ideal of a graph with loops: x_i^2 per loop, x_i x_j per edge."""
    gens = []
    for v in loops:
        exps = [0] * n
        exps[v - 1] = 2
        gens.append(Monomial(tuple(exps)))
    for e in edges:
        exps = [0] * n
        for v in e:
            exps[v - 1] = 1
        gens.append(Monomial(tuple(exps)))
    return MonomialIdeal(n, tuple(gens))


def graph_items(n: int) -> list[tuple[str, object]]:
    loops = [("l", v) for v in range(1, n + 1)]
    edges = [
        ("e", frozenset({i, j})) for i in range(1, n + 1) for j in range(i + 1, n + 1)
    ]
    return loops + edges


def ideal_from_graph_code(n: int, items, code: int) -> MonomialIdeal:
    loops = [v for k, (kind, v) in enumerate(items) if kind == "l" and code >> k & 1]
    edges = [v for k, (kind, v) in enumerate(items) if kind == "e" and code >> k & 1]
    return ideal_from_graph(n, loops, edges)


def enumerate_antichains(n: int, max_circuits: int) -> list[tuple[frozenset[int], ...]]:
    """Every antichain of 1..max_circuits nonempty subsets of {1..n}."""
    subsets = [
        frozenset(s)
        for k in range(1, n + 1)
        for s in itertools.combinations(range(1, n + 1), k)
    ]
    out: list[tuple[frozenset[int], ...]] = []

    def rec(start: int, current: list[frozenset[int]]) -> None:
        if current:
            out.append(tuple(current))
        if len(current) == max_circuits:
            return
        for i in range(start, len(subsets)):
            s = subsets[i]
            if all(not (s <= t or t <= s) for t in current):
                rec(i + 1, current + [s])

    rec(0, [])
    return out


def canonical_clutter_key(n: int, circuits) -> tuple:
    """Lexicographically least relabeling of a circuit family under S_n."""
    best = None
    for perm in itertools.permutations(range(1, n + 1)):
        relabeled = tuple(
            sorted(tuple(sorted(perm[v - 1] for v in e)) for e in circuits)
        )
        if best is None or relabeled < best:
            best = relabeled
    return best


def random_squarefree_ideal(rng, n: int, max_circuits: int = 8) -> MonomialIdeal:
    """A random nonzero squarefree ideal: random supports, minimalized."""
    gens = set()
    for _ in range(rng.randint(1, max_circuits)):
        size = rng.randint(1, n)
        support = rng.sample(range(1, n + 1), size)
        exps = [0] * n
        for v in support:
            exps[v - 1] = 1
        gens.add(Monomial(tuple(exps)))
    from tameideal.core import make_ideal

    return make_ideal(n, gens)
