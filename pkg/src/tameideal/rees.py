"""Binomial defining equations of the Rees algebra of a tame circuit ideal.

For a complete d-partite d-uniform clutter the defining ideal is generated by
swap binomials: writing e(j) for the circuit obtained from e by replacing the
unique vertex of e in j's part with j,

* linear part:  T_e x_i - x_r T_{e(i)}   (i a non-isolated vertex outside e,
  r the vertex of e in i's part),
* pure-T part:  T_e T_{e'} - T_{e(j')} T_{e'(j)}   (circuits differing in at
  least two parts, j/j' the chosen swap vertices of e/e' in a common part).

Every binomial vanishes under T_e -> x_e t, which is checked by plain
exponent arithmetic (:func:`verify_rees`).  Setting T_e = 1 recovers the
chart ideal at e (:func:`chart_ideal`, :func:`dehomogenize`), and the split
into the two shapes above is the fiber-type decomposition.

T-variables are indexed by the circuits in sorted-vertex-tuple order:
T_1 is the lexicographically smallest circuit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import Clutter, MonomialIdeal, ideal_to_clutter, set_key
from .errors import (
    CircuitNotInClutter,
    InternalCheckFailed,
    MixedGenerator,
    VertexNotPartitioned,
)


@dataclass(frozen=True)
class PartitionedClutter:
    """A complete d-partite d-uniform clutter with its d-partition.

    Parts are disjoint, every circuit meets every part exactly once, and the
    circuit count equals the product of the part sizes (completeness).
    Vertices outside every part are isolated and never appear in equations.
    """

    clutter: Clutter
    parts: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(frozenset(p) for p in self.parts))
        if not self.parts:
            raise ValueError("a partition needs at least one part")
        covered: set[int] = set()
        for p in self.parts:
            if not p:
                raise ValueError("partition parts must be nonempty")
            if covered & p:
                raise ValueError("partition parts must be disjoint")
            covered |= p
        if covered != self.clutter.support:
            raise ValueError("partition must cover exactly the non-isolated vertices")
        expected = 1
        for p in self.parts:
            expected *= len(p)
        if len(self.clutter.circuits) != expected:
            raise ValueError(
                f"{len(self.clutter.circuits)} circuits, but completeness requires {expected}"
            )
        for e in self.clutter.circuits:
            if any(len(e & p) != 1 for p in self.parts):
                raise ValueError(f"circuit {set_key(e)} does not meet every part exactly once")

    @property
    def n(self) -> int:
        return self.clutter.n

    @property
    def circuits(self) -> tuple[frozenset[int], ...]:
        return self.clutter.circuits

    def circuit_index(self, e: frozenset[int]) -> int:
        """0-based T-variable index of a circuit."""
        try:
            return self.circuits.index(frozenset(e))
        except ValueError:
            raise CircuitNotInClutter(f"{set_key(e)} is not a circuit") from None

    def part_index_of(self, vertex: int) -> int:
        for k, p in enumerate(self.parts):
            if vertex in p:
                return k
        raise VertexNotPartitioned(f"vertex {vertex} lies in no part")

    def partner_in_circuit(self, e: frozenset[int], vertex: int) -> int:
        """v_e(j): the unique vertex of the circuit e in `vertex`'s part."""
        part = self.parts[self.part_index_of(vertex)]
        hits = e & part
        if len(hits) != 1:
            raise InternalCheckFailed("circuit does not meet the part exactly once")
        return next(iter(hits))


def partitioned_clutter_from_parts(
    n: int, parts: Iterable[Iterable[int]]
) -> PartitionedClutter:
    """The complete d-partite d-uniform clutter generated by the given parts."""
    part_sets = [sorted(set(p)) for p in parts]
    circuits = [frozenset()]
    for p in part_sets:
        circuits = [e | {v} for e in circuits for v in p]
    return PartitionedClutter(
        Clutter(n, tuple(circuits)), tuple(frozenset(p) for p in part_sets)
    )


def swap_circuit(pc: PartitionedClutter, e: frozenset[int], j: int) -> frozenset[int]:
    """e(j): replace the vertex of e in j's part by j.

    Completeness of the clutter guarantees the result is again a circuit.
    """
    e = frozenset(e)
    if e not in pc.circuits:
        raise CircuitNotInClutter(f"{set_key(e)} is not a circuit")
    if j in e:
        raise ValueError(f"vertex {j} already lies in the circuit")
    partner = pc.partner_in_circuit(e, j)
    swapped = (e - {partner}) | {j}
    if swapped not in pc.circuits:
        raise InternalCheckFailed("swap left the clutter; completeness is broken")
    return swapped


@dataclass(frozen=True, order=True)
class Term:
    """One side of a binomial: T-exponents (dense, in T order) and x-exponents."""

    t: tuple[int, ...]
    x: tuple[int, ...]

    @property
    def t_degree(self) -> int:
        return sum(self.t)

    @property
    def x_degree(self) -> int:
        return sum(self.x)


@dataclass(frozen=True, order=True)
class Binomial:
    """A canonical two-term relation: leading term (coefficient +1) first.

    The leading term is the larger one in the (T-exponents, x-exponents)
    tuple order, so equal binomials written with either sign coincide.
    """

    plus: Term
    minus: Term

    def __post_init__(self):
        if not self.plus > self.minus:
            raise ValueError("terms must be in canonical order and distinct")

    @property
    def is_bihomogeneous(self) -> bool:
        return (
            self.plus.t_degree == self.minus.t_degree
            and self.plus.x_degree == self.minus.x_degree
        )


def make_binomial(a: Term, b: Term) -> Optional[Binomial]:
    """Canonicalize a - b; None if the difference is identically zero."""
    if a == b:
        return None
    return Binomial(a, b) if a > b else Binomial(b, a)


def _term(n_vars: int, n_circuits: int, x_of: Iterable[int] = (), t_of: Iterable[int] = ()) -> Term:
    x = [0] * n_vars
    for v in x_of:
        x[v - 1] += 1
    t = [0] * n_circuits
    for idx in t_of:
        t[idx] += 1
    return Term(tuple(t), tuple(x))


def _choose_swap(pc: PartitionedClutter, e: frozenset[int], f: frozenset[int]) -> tuple[int, int]:
    """Default v(e,e') rule: swap in the smallest-indexed part where e and f
    differ; returns (vertex of e there, vertex of f there)."""
    for part in pc.parts:
        ve = e & part
        vf = f & part
        if ve != vf:
            return next(iter(ve)), next(iter(vf))
    raise InternalCheckFailed("distinct circuits with no differing part")


def rees_generators(pc: PartitionedClutter) -> tuple[Binomial, ...]:
    """The defining binomials: all x-linear swaps and all T-pure double swaps.

    Each x-linear relation arises once from either endpoint circuit with
    opposite signs; canonicalization collapses the two copies.  Double swaps
    are emitted once per unordered circuit pair differing in at least two
    parts, with the swap part chosen by the default rule.
    """
    circuits = pc.circuits
    m = len(circuits)
    n = pc.n
    non_isolated = sorted(pc.clutter.support)
    out: set[Binomial] = set()
    for e in circuits:
        ie = pc.circuit_index(e)
        for i in non_isolated:
            if i in e:
                continue
            r = pc.partner_in_circuit(e, i)
            swapped = pc.circuit_index(swap_circuit(pc, e, i))
            b = make_binomial(
                _term(n, m, x_of=[i], t_of=[ie]),
                _term(n, m, x_of=[r], t_of=[swapped]),
            )
            assert b is not None
            out.add(b)
    for a in range(m):
        for c in range(a + 1, m):
            e, f = circuits[a], circuits[c]
            if len(f - e) <= 1:
                continue
            j, j2 = _choose_swap(pc, e, f)
            ej2 = pc.circuit_index(swap_circuit(pc, e, j2))
            fj = pc.circuit_index(swap_circuit(pc, f, j))
            b = make_binomial(
                _term(n, m, t_of=[a, c]),
                _term(n, m, t_of=[ej2, fj]),
            )
            if b is not None:
                out.add(b)
    return tuple(sorted(out))


def chart_ideal(pc: PartitionedClutter, e: frozenset[int]) -> tuple[Binomial, ...]:
    """Defining binomials of the chart at circuit e: x_i - x_r T_{e(i)} and
    T_{e'} - T_{e(j')} T_{e'(j)} for circuits e' differing from e in at least
    two parts.  Every returned binomial is checked to vanish under the chart
    substitution T_{e'} -> x_{e'} / x_e."""
    e = frozenset(e)
    if e not in pc.circuits:
        raise CircuitNotInClutter(f"{set_key(e)} is not a circuit")
    circuits = pc.circuits
    m = len(circuits)
    n = pc.n
    out: set[Binomial] = set()
    for i in sorted(pc.clutter.support):
        if i in e:
            continue
        r = pc.partner_in_circuit(e, i)
        swapped = pc.circuit_index(swap_circuit(pc, e, i))
        b = make_binomial(
            _term(n, m, x_of=[i]),
            _term(n, m, x_of=[r], t_of=[swapped]),
        )
        assert b is not None
        out.add(b)
    for f in circuits:
        if len(f - e) <= 1:
            continue
        j, j2 = _choose_swap(pc, e, f)
        ej2 = pc.circuit_index(swap_circuit(pc, e, j2))
        fj = pc.circuit_index(swap_circuit(pc, f, j))
        b = make_binomial(
            _term(n, m, t_of=[pc.circuit_index(f)]),
            _term(n, m, t_of=[ej2, fj]),
        )
        if b is not None:
            out.add(b)
    result = tuple(sorted(out))
    for b in result:
        if not _vanishes_in_chart(pc, b, e):
            raise InternalCheckFailed(f"chart binomial {b} fails the chart substitution")
    return result


def _chart_image(pc: PartitionedClutter, term: Term, e: frozenset[int]) -> tuple[int, ...]:
    """Exponent vector of a term under x_i -> x_i, T_{e'} -> x_{e'} / x_e."""
    n = pc.n
    out = list(term.x)
    for idx, mult in enumerate(term.t):
        if mult == 0:
            continue
        for v in pc.circuits[idx]:
            out[v - 1] += mult
        for v in e:
            out[v - 1] -= mult
    return tuple(out)


def _vanishes_in_chart(pc: PartitionedClutter, b: Binomial, e: frozenset[int]) -> bool:
    return _chart_image(pc, b.plus, e) == _chart_image(pc, b.minus, e)


def dehomogenize(
    pc: PartitionedClutter, gens: Iterable[Binomial], e: frozenset[int]
) -> tuple[Binomial, ...]:
    """Set T_e = 1 in every generator and re-canonicalize."""
    idx = pc.circuit_index(frozenset(e))
    out: set[Binomial] = set()
    for b in gens:
        terms = []
        for term in (b.plus, b.minus):
            t = list(term.t)
            t[idx] = 0
            terms.append(Term(tuple(t), term.x))
        deh = make_binomial(terms[0], terms[1])
        if deh is not None:
            out.add(deh)
    return tuple(sorted(out))


def chart_contained_in_dehomogenization(
    pc: PartitionedClutter, e: frozenset[int], gens: Iterable[Binomial] | None = None
) -> bool:
    """Check chart_ideal(pc, e) against the dehomogenized Rees generators.

    Canonical binomials absorb sign differences, so containment is plain set
    inclusion.
    """
    if gens is None:
        gens = rees_generators(pc)
    dehomogenized = set(dehomogenize(pc, gens, e))
    return set(chart_ideal(pc, e)) <= dehomogenized


def _substitution_image(pc: PartitionedClutter, term: Term) -> tuple[tuple[int, ...], int]:
    """Image of a term under T_e -> x_e t, as (x-exponents, t-degree)."""
    out = list(term.x)
    for idx, mult in enumerate(term.t):
        if mult == 0:
            continue
        for v in pc.circuits[idx]:
            out[v - 1] += mult
    return tuple(out), term.t_degree


def verify_rees(gens: Iterable[Binomial], pc: PartitionedClutter) -> bool:
    """True iff every binomial vanishes identically under T_e -> x_e t."""
    return all(
        _substitution_image(pc, b.plus) == _substitution_image(pc, b.minus) for b in gens
    )


def fiber_type_split(
    gens: Iterable[Binomial],
) -> tuple[tuple[Binomial, ...], tuple[Binomial, ...]]:
    """Split generators into the x-linear syzygy part and the pure-T part.

    Every generator must land in exactly one class; anything else signals a
    construction bug and raises MixedGenerator.
    """
    linear: list[Binomial] = []
    fiber: list[Binomial] = []
    for b in gens:
        is_linear = b.plus.t_degree == 1 and b.minus.t_degree == 1
        is_fiber = b.plus.x_degree == 0 and b.minus.x_degree == 0
        if is_linear == is_fiber:
            raise MixedGenerator(f"{b} fits {'both' if is_linear else 'neither'} class")
        (linear if is_linear else fiber).append(b)
    return tuple(sorted(linear)), tuple(sorted(fiber))


def partitioned_clutter_from_ideal(ideal: MonomialIdeal) -> PartitionedClutter:
    """Build the partitioned clutter of a tame squarefree ideal.

    Raises ValueError when the ideal is not of that shape (the parts come
    from the disjoint minimal prime supports, which exist iff the ideal is
    tame).
    """
    from .tameness import is_tame_squarefree

    report = is_tame_squarefree(ideal)
    if not report.tame:
        raise ValueError("the ideal is not tame; no partitioned clutter exists")
    parts = report.witness.parts
    pc = partitioned_clutter_from_parts(ideal.n, parts)
    if pc.clutter != ideal_to_clutter(ideal):
        raise InternalCheckFailed("partition does not regenerate the circuit clutter")
    return pc
