"""Blowup chart coordinate rings and their minimal algebra generators.

A chart at a minimal generator u is the algebra generated by the n variables
together with the ratios u'/u over the other minimal generators; on exponent
vectors a ratio is just the (possibly negative) difference of two generator
exponents.  The chart is regular at a vertex center iff the unique minimal
generating set U' of that algebra has exactly n elements.

Reduction to U' is a pure semigroup question: an element is redundant iff its
exponent vector is a nonnegative-integer combination of the other elements'
vectors.  :func:`cone_membership` decides that by a depth-first search over
multiplicities with exact integer arithmetic; it either finds a combination,
proves there is none, or raises ``SearchBudgetExceeded`` -- it never guesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Sequence

from .core import Monomial, MonomialIdeal
from .errors import (
    InternalCheckFailed,
    NotAGenerator,
    NotAVertex,
    SearchBudgetExceeded,
)
from .linprog import feasible_eq_nonneg, solve_eq_nonneg
from .newton import is_vertex

DEFAULT_NODE_BUDGET = 1_000_000


@lru_cache(maxsize=4096)
def positivity_certificate(vectors: tuple[tuple[int, ...], ...]) -> tuple[int, ...] | None:
    """An integer functional h with h . v >= 1 for every given vector, if any.

    Such an h exists iff the cone spanned by the vectors is pointed (admits no
    nontrivial nonnegative zero-combination).  Chart generator sets at vertex
    centers are always pointed: a zero-combination of ratios and variables
    would exhibit the center as a convex combination of the other generators.
    The functional turns the cone search into a finite one, since every basis
    multiplicity is capped by h . residual.
    """
    if not vectors:
        return None
    n = len(vectors[0])
    units = {tuple(1 if j == c else 0 for j in range(n)) for c in range(n)}
    if units <= set(vectors):
        # Chart shape: the unit vectors force h >= 1 componentwise, so write
        # h = 1 + g with g >= 0 and keep only the ratio constraints
        # g . v >= 1 - deg(v).
        ratios = [v for v in vectors if v not in units]
        if not ratios:
            return (1,) * n
        rows = []
        for i, v in enumerate(ratios):
            row = list(v) + [0] * len(ratios)
            row[n + i] = -1
            rows.append(row)
        sol = solve_eq_nonneg(rows, [1 - sum(v) for v in ratios])
        if sol is None:
            return None
        h = [1 + sol[c] for c in range(n)]
    else:
        # General shape: h is sign-free (h = p - q with p, q >= 0) and one
        # slack per vector turns h . v >= 1 into an equality system.
        k = len(vectors)
        rows = []
        for i, v in enumerate(vectors):
            row = list(v) + [-c for c in v] + [0] * k
            row[2 * n + i] = -1
            rows.append(row)
        sol = solve_eq_nonneg(rows, [1] * k)
        if sol is None:
            return None
        h = [sol[c] - sol[n + c] for c in range(n)]
    scale = lcm(*(f.denominator for f in h)) if h else 1
    out = tuple(int(f * scale) for f in h)
    assert all(sum(hc * vc for hc, vc in zip(out, v)) >= 1 for v in vectors)
    return out


@dataclass(frozen=True, order=True)
class LaurentMonomial:
    """An integer exponent vector; negative entries encode denominators."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_unit_vector(self) -> bool:
        return sum(self.exponents) == 1 and all(e in (0, 1) for e in self.exponents)


def unit_vectors(n: int) -> tuple[LaurentMonomial, ...]:
    return tuple(
        LaurentMonomial(tuple(1 if j == k else 0 for j in range(n))) for k in range(n)
    )


@dataclass(frozen=True)
class ChartAlgebra:
    """Generator set of a chart coordinate ring: the n variables plus ratios."""

    n: int
    gens: tuple[LaurentMonomial, ...]

    def __post_init__(self):
        seen = set()
        deduped = []
        for g in self.gens:
            if g.n != self.n:
                raise ValueError(f"{g} has length {g.n}, ambient n = {self.n}")
            if g.exponents not in seen:
                seen.add(g.exponents)
                deduped.append(g)
        object.__setattr__(self, "gens", tuple(deduped))
        for u in unit_vectors(self.n):
            if u.exponents not in seen:
                raise ValueError(f"chart algebra must contain the variable {u.exponents}")


def chart(ideal: MonomialIdeal, center: Monomial) -> ChartAlgebra:
    """The chart generator set at a minimal generator: variables and ratios u'/u."""
    if center not in ideal.gens:
        raise NotAGenerator(f"{center} is not a minimal generator")
    ratios = [
        LaurentMonomial(tuple(a - b for a, b in zip(g.exponents, center.exponents)))
        for g in ideal.gens
        if g != center
    ]
    return ChartAlgebra(ideal.n, tuple(sorted(set(unit_vectors(ideal.n)) | set(ratios))))


def cone_membership(
    target: LaurentMonomial,
    basis: Sequence[LaurentMonomial],
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    positivity: tuple[int, ...] | None = None,
) -> dict[LaurentMonomial, int] | None:
    """Nonnegative-integer multiplicities writing `target` over `basis`, or None.

    Returns a dict with the nonzero multiplicities of a solution, or None when
    the exhaustive search proves there is no solution.  If a branch had to be
    cut by the multiplicity cap or the node budget before either outcome is
    established, raises ``SearchBudgetExceeded``.

    Search order is depth-first over the basis in the order given, maintaining
    the integer residual.  Pruning is exact: per-coordinate and total-degree
    sign availability over the remaining suffix, plus a positivity functional
    (h . v >= 1 on the basis, computed by an exact LP or supplied via
    ``positivity``).  When the functional exists -- always, at vertex charts --
    it bounds every multiplicity and the search is provably exhaustive, so
    None is definitive.  Without it (a cone containing a line) the target is
    first screened by a rational-feasibility LP and branches are cut by a hard
    multiplicity cap, whose exhaustion raises instead of answering.
    """
    t = target.exponents
    n = len(t)
    vecs: list[tuple[int, ...]] = []
    elements: list[LaurentMonomial] = []
    seen = set()
    for b in basis:
        if b.n != n:
            raise ValueError("basis and target lengths differ")
        if b.exponents in seen or all(e == 0 for e in b.exponents):
            continue
        seen.add(b.exponents)
        vecs.append(b.exponents)
        elements.append(b)
    if all(e == 0 for e in t):
        return {}
    if not vecs:
        return None
    h = positivity if positivity is not None else positivity_certificate(tuple(vecs))
    if h is not None:
        hvals = [sum(hc * vc for hc, vc in zip(h, v)) for v in vecs]
        if any(hv < 1 for hv in hvals):
            raise ValueError("positivity functional is not strictly positive on the basis")
        ht = sum(hc * tc for hc, tc in zip(h, t))
        if ht < 0:
            return None
    else:
        hvals = None
        ht = 0
        # Without a positivity bound, reject rationally infeasible targets up
        # front so the capped search is only entered when it could succeed.
        rows = [[v[c] for v in vecs] for c in range(n)]
        if not feasible_eq_nonneg(rows, list(t)):
            return None

    k = len(vecs)
    degs = [sum(v) for v in vecs]
    # has_pos[c][i]: some vecs[j][c] > 0 with j >= i (same for neg and degree).
    has_pos = [[False] * (k + 1) for _ in range(n)]
    has_neg = [[False] * (k + 1) for _ in range(n)]
    deg_pos = [False] * (k + 1)
    deg_neg = [False] * (k + 1)
    for i in range(k - 1, -1, -1):
        for c in range(n):
            has_pos[c][i] = has_pos[c][i + 1] or vecs[i][c] > 0
            has_neg[c][i] = has_neg[c][i + 1] or vecs[i][c] < 0
        deg_pos[i] = deg_pos[i + 1] or degs[i] > 0
        deg_neg[i] = deg_neg[i + 1] or degs[i] < 0

    cap_base = sum(abs(x) for x in t)
    residual = list(t)
    counts = [0] * k
    state = {"budget": node_budget, "incomplete": False, "hres": ht}

    def suffix_dead(i: int) -> bool:
        if hvals is not None and state["hres"] < 0:
            return True
        for c in range(n):
            rc = residual[c]
            if rc > 0 and not has_pos[c][i]:
                return True
            if rc < 0 and not has_neg[c][i]:
                return True
        rd = sum(residual)
        if rd > 0 and not deg_pos[i]:
            return True
        if rd < 0 and not deg_neg[i]:
            return True
        return False

    def sound_bound(i: int) -> int | None:
        """Largest multiplicity of vecs[i] not provably hopeless, or None."""
        v = vecs[i]
        bound: int | None = None
        for c in range(n):
            vc = v[c]
            if vc > 0 and not has_neg[c][i + 1]:
                b = residual[c] // vc if residual[c] >= 0 else -1
            elif vc < 0 and not has_pos[c][i + 1]:
                b = (-residual[c]) // (-vc) if residual[c] <= 0 else -1
            else:
                continue
            bound = b if bound is None else min(bound, b)
            if bound < 0:
                return bound
        dv = degs[i]
        rd = sum(residual)
        if dv > 0 and not deg_neg[i + 1]:
            b = rd // dv if rd >= 0 else -1
            bound = b if bound is None else min(bound, b)
        elif dv < 0 and not deg_pos[i + 1]:
            b = (-rd) // (-dv) if rd <= 0 else -1
            bound = b if bound is None else min(bound, b)
        return bound

    def dfs(i: int) -> bool:
        state["budget"] -= 1
        if state["budget"] < 0:
            raise SearchBudgetExceeded(
                f"cone membership search exceeded {node_budget} nodes"
            )
        if all(x == 0 for x in residual):
            for j in range(i, k):
                counts[j] = 0
            return True
        if i == k or suffix_dead(i):
            return False
        v = vecs[i]
        bound = sound_bound(i)
        if hvals is not None:
            hb = state["hres"] // hvals[i]
            bound = hb if bound is None else min(bound, hb)
        if bound is not None and bound < 0:
            return False
        if bound is None:
            # No sound bound: fall back to the heuristic multiplicity cap and
            # remember that exhausting this loop proves nothing.
            limit, capped = sum(abs(x) for x in residual) + cap_base, True
        else:
            limit, capped = bound, False
        m = 0
        try:
            while m <= limit:
                counts[i] = m
                if dfs(i + 1):
                    return True
                m += 1
                if m <= limit:
                    for c in range(n):
                        residual[c] -= v[c]
                    if hvals is not None:
                        state["hres"] -= hvals[i]
            if capped:
                state["incomplete"] = True
            return False
        finally:
            steps = min(m, limit)
            for c in range(n):
                residual[c] += steps * v[c]
            if hvals is not None:
                state["hres"] += steps * hvals[i]

    found = dfs(0)
    if found:
        return {elements[i]: counts[i] for i in range(k) if counts[i] > 0}
    if state["incomplete"]:
        raise SearchBudgetExceeded(
            "cone membership search was cut by the multiplicity cap"
        )
    return None


def minimal_algebra_generators(
    algebra: ChartAlgebra,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    verify: bool = True,
) -> tuple[LaurentMonomial, ...]:
    """The unique minimal subset of the chart generators with the same algebra.

    An element is dropped iff it is a nonnegative-integer combination of all
    the *other* elements; each element is tested independently against the
    full complement, which by uniqueness of the minimal set agrees with any
    sequential deletion order.  Two self-checks guard the theory at runtime:
    the result can never have fewer than n elements, and with ``verify=True``
    every dropped element is replayed as a combination of the survivors.
    """
    gens = list(algebra.gens)
    shared = positivity_certificate(tuple(g.exponents for g in gens))
    survivors: list[LaurentMonomial] = []
    dropped: list[LaurentMonomial] = []
    for g in gens:
        others = [h for h in gens if h != g]
        if cone_membership(g, others, node_budget=node_budget, positivity=shared) is None:
            survivors.append(g)
        else:
            dropped.append(g)
    if len(survivors) < algebra.n:
        raise InternalCheckFailed(
            f"reduced generating set has {len(survivors)} < n = {algebra.n} elements"
        )
    if verify:
        for g in dropped:
            if cone_membership(g, survivors, node_budget=node_budget, positivity=shared) is None:
                raise InternalCheckFailed(
                    f"uniqueness violated: dropped element {g.exponents} is not "
                    "generated by the surviving set"
                )
    return tuple(sorted(survivors))


@dataclass(frozen=True)
class ChartReport:
    """Outcome of a chart regularity test."""

    regular: bool
    algebra: ChartAlgebra
    reduced: tuple[LaurentMonomial, ...]

    @property
    def reduced_size(self) -> int:
        return len(self.reduced)


def is_chart_regular(
    ideal: MonomialIdeal,
    center: Monomial,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    vertex_checked: bool = False,
) -> ChartReport:
    """Regularity of the chart at a vertex center: |U'| == n.

    The criterion is only valid at vertices of the Newton polyhedron, so a
    non-vertex center is rejected.  Pass ``vertex_checked=True`` when the
    caller has already certified the center.
    """
    if center not in ideal.gens:
        raise NotAGenerator(f"{center} is not a minimal generator")
    if not vertex_checked and not is_vertex(ideal, center).is_vertex:
        raise NotAVertex(f"{center} is not a vertex of the Newton polyhedron")
    algebra = chart(ideal, center)
    reduced = minimal_algebra_generators(algebra, node_budget=node_budget)
    return ChartReport(len(reduced) == ideal.n, algebra, reduced)


def count_survivors(
    algebra: ChartAlgebra,
    *,
    stop_above: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> int:
    """Number of irredundant chart generators, stopping early once it exceeds
    ``stop_above``.  The partial count is a lower bound for |U'|, so exceeding
    n already certifies irregularity."""
    gens = list(algebra.gens)
    shared = positivity_certificate(tuple(g.exponents for g in gens))
    count = 0
    for g in gens:
        others = [h for h in gens if h != g]
        if cone_membership(g, others, node_budget=node_budget, positivity=shared) is None:
            count += 1
            if stop_above is not None and count > stop_above:
                return count
    return count
