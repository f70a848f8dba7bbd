"""Tameness deciders: chart-based, squarefree structural, and degree <= 2.

An ideal is tame when the blowup of affine space along it is regular.  The
three routes implemented here are mutually cross-checkable:

* charts: every vertex generator's chart must reduce to exactly n algebra
  generators (always applicable);
* squarefree structural: the minimal prime supports must be pairwise
  disjoint, i.e. the ideal is a product P_{F_1} ... P_{F_d} over disjoint
  supports (equivalently the circuit clutter is isolated vertices plus a
  complete d-partite d-uniform clutter);
* degree <= 2: the loop/edge graph must be a looped complete graph (P_F^2),
  a looped star (x_i P_F), a looped complete graph completely joined to an
  independent set (P_{F_1} P_{F_2} with F_1 inside F_2), a complete
  bipartite graph (P_{F_1} P_{F_2} with disjoint parts), or the generators
  must all be linear (P_F).

Polarization gives a one-sided reduction: a tame polarization forces the
ideal to factor as monomial * tame squarefree ideal, hence to be tame; the
converse fails (P_F^2 is tame with a non-tame polarization).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .charts import DEFAULT_NODE_BUDGET, chart, count_survivors
from .core import (
    Clutter,
    Monomial,
    MonomialIdeal,
    minimal_primes,
    open_neighborhood,
    polarize,
    product_ideal,
    set_key,
    stanley_reisner_complex,
)
from .errors import DegreeTooHigh, InternalCheckFailed, NotSquarefree
from .newton import vertex_generators

METHOD_CHARTS = "charts"
METHOD_SQUAREFREE = "squarefree-structural"
METHOD_DEGREE2 = "degree2"
METHOD_POLARIZATION = "polarization-reduction"


@dataclass(frozen=True)
class ChartSizesWitness:
    """Reduced chart size at every vertex generator (all equal to n)."""

    entries: tuple[tuple[Monomial, int], ...]


@dataclass(frozen=True)
class FailingChartWitness:
    """A vertex center whose chart reduces to more than n generators."""

    center: Monomial
    reduced_size: int
    ambient: int


@dataclass(frozen=True)
class DisjointPrimesWitness:
    """Pairwise disjoint prime supports F_i with I = P_{F_1} ... P_{F_d}."""

    parts: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class IntersectingPrimesWitness:
    """Two minimal prime supports that overlap, refuting structurally."""

    first: frozenset[int]
    second: frozenset[int]


@dataclass(frozen=True)
class TamenessReport:
    tame: bool
    method: str
    witness: object


@dataclass(frozen=True)
class LinearPrime:
    """I = P_F: every generator is a variable."""

    vertices: frozenset[int]

    is_tame = True

    def reconstruct(self, n: int) -> MonomialIdeal:
        return product_ideal(n, [self.vertices])


@dataclass(frozen=True)
class PrimeSquare:
    """I = P_F^2: the looped complete graph on F."""

    vertices: frozenset[int]

    is_tame = True

    def reconstruct(self, n: int) -> MonomialIdeal:
        return product_ideal(n, [self.vertices, self.vertices])


@dataclass(frozen=True)
class LoopedStar:
    """I = x_c P_F with c in F: the star on F with a loop at its center c."""

    vertices: frozenset[int]
    center: int

    is_tame = True

    def reconstruct(self, n: int) -> MonomialIdeal:
        return product_ideal(n, [{self.center}, self.vertices])


@dataclass(frozen=True)
class BipartiteProduct:
    """I = P_{F_1} P_{F_2} with disjoint parts: complete bipartite graph."""

    first: frozenset[int]
    second: frozenset[int]

    is_tame = True

    def reconstruct(self, n: int) -> MonomialIdeal:
        return product_ideal(n, [self.first, self.second])


@dataclass(frozen=True)
class NestedPrimeProduct:
    """I = P_{F_1} P_{F_2} with F_1 strictly inside F_2 and |F_1| >= 2.

    The graph is a looped complete graph on F_1 joined completely to the
    loopless vertices F_2 \\ F_1.  Every chart of such an ideal is regular
    (the inner/outer ratios generate each other across the shared part), so
    the shape is tame even though it is neither a looped star (that is the
    |F_1| = 1 case) nor a looped complete graph (the F_1 = F_2 case).
    """

    inner: frozenset[int]
    outer: frozenset[int]

    is_tame = True

    def reconstruct(self, n: int) -> MonomialIdeal:
        return product_ideal(n, [self.inner, self.outer])


@dataclass(frozen=True)
class NotTameDeg2:
    """Degree <= 2 ideal matching none of the tame shapes."""

    reason: str

    is_tame = False


Deg2Classification = Union[
    LinearPrime, PrimeSquare, LoopedStar, NestedPrimeProduct, BipartiteProduct, NotTameDeg2
]


def is_tame_general(
    ideal: MonomialIdeal,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> TamenessReport:
    """Chart decider: tame iff every vertex generator's chart is regular.

    Scans vertex charts with an early exit (as soon as more than n
    irredundant generators are found the chart is irregular); a failing
    center is then re-scanned without the cutoff so the witness carries the
    exact |U'|.
    """
    centers = vertex_generators(ideal)
    n = ideal.n
    entries = []
    for center in centers:
        algebra = chart(ideal, center)
        survivors = count_survivors(algebra, stop_above=n, node_budget=node_budget)
        if survivors > n:
            exact = count_survivors(algebra, node_budget=node_budget)
            return TamenessReport(
                False, METHOD_CHARTS, FailingChartWitness(center, exact, n)
            )
        if survivors < n:
            raise InternalCheckFailed(
                f"chart at {center} reduced below the ambient dimension"
            )
        entries.append((center, survivors))
    return TamenessReport(True, METHOD_CHARTS, ChartSizesWitness(tuple(entries)))


def is_tame_squarefree(ideal: MonomialIdeal) -> TamenessReport:
    """Structural decider: tame iff the minimal prime supports are disjoint.

    Equivalently, every pair of Stanley-Reisner facets unions to the whole
    vertex set.  A tame verdict is re-verified by expanding the product of
    the witness primes back into the minimal generators.
    """
    if not ideal.is_squarefree:
        raise NotSquarefree("structural decider needs a squarefree ideal")
    primes = minimal_primes(ideal)
    for i, f in enumerate(primes):
        for g in primes[i + 1 :]:
            if f & g:
                return TamenessReport(
                    False, METHOD_SQUAREFREE, IntersectingPrimesWitness(f, g)
                )
    if product_ideal(ideal.n, primes) != ideal:
        raise InternalCheckFailed(
            "disjoint primes found but their product does not reproduce the ideal"
        )
    return TamenessReport(True, METHOD_SQUAREFREE, DisjointPrimesWitness(primes))


def facet_union_criterion(ideal: MonomialIdeal) -> bool:
    """Facet form of the structural test: every two facets cover {1..n}."""
    complex_ = stanley_reisner_complex(ideal)
    everything = frozenset(range(1, ideal.n + 1))
    facets = complex_.facets
    for i, f in enumerate(facets):
        for g in facets[i + 1 :]:
            if f | g != everything:
                return False
    return True


def complete_d_partite(clutter: Clutter) -> Optional[tuple[frozenset[int], ...]]:
    """Recover the unique d-partition of a complete d-partite uniform clutter.

    Restricting to non-isolated vertices, each part is rebuilt from the
    lexicographically smallest circuit e0 as (vertex of e0) + N(e0 minus that
    vertex), then four checks confirm completeness; any failure returns None.
    Parts come back ordered by smallest contained vertex.
    """
    parts, _reason = complete_d_partite_checked(clutter)
    return parts


def complete_d_partite_checked(
    clutter: Clutter,
) -> tuple[Optional[tuple[frozenset[int], ...]], Optional[str]]:
    """Like :func:`complete_d_partite` but reports which check failed."""
    d = clutter.uniform_size
    if d is None:
        return None, "circuit sizes are mixed"
    e0 = min(clutter.circuits, key=set_key)
    parts = []
    for v in sorted(e0):
        parts.append(frozenset({v}) | open_neighborhood(clutter, e0 - {v}))
    covered: set[int] = set()
    for p in parts:
        if covered & p:
            return None, "recovered parts overlap"
        covered |= p
    if covered != clutter.support:
        return None, "recovered parts miss a non-isolated vertex"
    for e in clutter.circuits:
        if any(len(e & p) != 1 for p in parts):
            return None, f"circuit {set_key(e)} does not meet every part exactly once"
    expected = 1
    for p in parts:
        expected *= len(p)
    if len(clutter.circuits) != expected:
        return None, (
            f"{len(clutter.circuits)} circuits but a complete clutter would have {expected}"
        )
    return tuple(sorted(parts, key=set_key)), None


def _loops_and_edges(ideal: MonomialIdeal) -> tuple[set[int], set[frozenset[int]]]:
    loops: set[int] = set()
    edges: set[frozenset[int]] = set()
    for g in ideal.gens:
        support = g.support
        if len(support) == 1 and g.degree == 2:
            loops.add(next(iter(support)))
        else:
            edges.add(support)
    return loops, edges


def classify_deg2(ideal: MonomialIdeal) -> Deg2Classification:
    """Match a degree <= 2 ideal against the tame shapes.

    The shapes are mutually exclusive on the loop/edge graph except for a
    single loop x_c^2, which is reported as PrimeSquare({c}), and they are
    tried from most to least constrained: looped complete, looped star,
    nested product, complete bipartite.  A successful classification is
    replayed by reconstructing the ideal from the shape.
    """
    if ideal.max_degree > 2:
        raise DegreeTooHigh("classifier only accepts generators of degree <= 2")
    degrees = {g.degree for g in ideal.gens}
    if degrees == {1}:
        result: Deg2Classification = LinearPrime(
            frozenset(next(iter(g.support)) for g in ideal.gens)
        )
    elif degrees == {2}:
        result = _classify_graph(ideal)
    else:
        return NotTameDeg2("generators of degree 1 and 2 are mixed")
    if result.is_tame and result.reconstruct(ideal.n) != ideal:
        raise InternalCheckFailed(f"classification {result} does not reconstruct the ideal")
    return result


def _classify_graph(ideal: MonomialIdeal) -> Deg2Classification:
    loops, edges = _loops_and_edges(ideal)
    vertices = frozenset(loops) | frozenset(v for e in edges for v in e)
    all_pairs = {
        frozenset({i, j}) for i in vertices for j in vertices if i < j
    }
    if loops == vertices and edges == all_pairs:
        return PrimeSquare(vertices)
    if len(loops) == 1:
        center = next(iter(loops))
        star = {frozenset({center, v}) for v in vertices - {center}}
        if edges == star:
            return LoopedStar(vertices, center)
    if len(loops) >= 2:
        inner = frozenset(loops)
        nested = {frozenset({i, j}) for i in inner for j in vertices if i != j}
        if edges == nested:
            return NestedPrimeProduct(inner, vertices)
    if not loops:
        partition = complete_d_partite(Clutter(ideal.n, tuple(edges)))
        if partition is not None and len(partition) == 2:
            return BipartiteProduct(partition[0], partition[1])
        return NotTameDeg2("simple graph is not a complete bipartite graph")
    return NotTameDeg2(
        "looped graph is not a looped complete graph, a looped star, or a "
        "looped complete graph completely joined to an independent set"
    )


def tame_via_polarization(
    ideal: MonomialIdeal,
) -> Optional[tuple[Monomial, MonomialIdeal]]:
    """One-sided polarization reduction: if the polarization is tame, factor
    the ideal as (monomial) * (tame squarefree ideal) and return the pair.

    Returns None when the polarization is not tame; the ideal itself may
    still be tame (P_F^2 is the standard example).
    """
    polarized = polarize(ideal)
    if not is_tame_squarefree(polarized.ideal).tame:
        return None
    n = ideal.n
    max_exp = [max(g.exponents[i] for g in ideal.gens) for i in range(n)]
    common = Monomial(tuple(max(e - 1, 0) for e in max_exp))
    quotient_gens = [g.divided_by(common) for g in ideal.gens]
    quotient = MonomialIdeal(n, tuple(quotient_gens))
    if not quotient.is_squarefree:
        raise InternalCheckFailed("tame polarization but non-squarefree quotient")
    if not is_tame_squarefree(quotient).tame:
        raise InternalCheckFailed("tame polarization but non-tame quotient")
    rebuilt = {common.times(g) for g in quotient.gens}
    if rebuilt != set(ideal.gens):
        raise InternalCheckFailed("factorization does not reproduce the ideal")
    return common, quotient


def decide(
    ideal: MonomialIdeal,
    *,
    method: str = "auto",
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> TamenessReport:
    """Public decider with cheapest-correct-first method selection.

    auto: squarefree ideals go to the structural test, degree <= 2 ideals to
    the classifier, everything else to the chart decider.  ``method`` may
    force "charts", "squarefree", or "degree2"; forcing an inapplicable
    method raises the corresponding input error.
    """
    if method == "charts":
        return is_tame_general(ideal, node_budget=node_budget)
    if method == "squarefree":
        return is_tame_squarefree(ideal)
    if method == "degree2":
        return deg2_report(ideal)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    if ideal.is_squarefree:
        return is_tame_squarefree(ideal)
    if ideal.max_degree <= 2:
        return deg2_report(ideal)
    return is_tame_general(ideal, node_budget=node_budget)


def deg2_report(ideal: MonomialIdeal) -> TamenessReport:
    classification = classify_deg2(ideal)
    return TamenessReport(classification.is_tame, METHOD_DEGREE2, classification)
