"""Exact models of monomials, monomial ideals, clutters and complexes.

Everything here is immutable and carries plain integer data, so values can be
hashed, compared and shared freely.  Vertices are the integers 1..n; exponent
vectors are length-n tuples indexed 0..n-1 (entry i-1 belongs to vertex i).

The squarefree dictionary implemented by this module:

* squarefree ideal  <->  clutter of generator supports (an antichain),
* minimal primes P_F <->  minimal transversals (vertex covers) F of the
  clutter,
* Stanley-Reisner facets  =  complements [n] \\ F of the minimal primes.

Deterministic ordering convention: a set of vertices is ordered by its sorted
vertex tuple, and families of sets are emitted in that order.  This is the
order in which T-variables are later attached to circuits.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Iterable

from .errors import EmptyGeneratorSet, LengthMismatch, NotSquarefree


def set_key(s: Iterable[int]) -> tuple[int, ...]:
    """Canonical sort key for a vertex set: its sorted tuple."""
    return tuple(sorted(s))


def sort_sets(sets: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    """Deduplicate and order a family of vertex sets deterministically."""
    return tuple(sorted({frozenset(s) for s in sets}, key=set_key))


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial x^a given by its exponent vector a in N^n."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def degree_in(self, vertex: int) -> int:
        """Exponent of the variable attached to `vertex` (1-based)."""
        return self.exponents[vertex - 1]

    @property
    def support(self) -> frozenset[int]:
        """Vertices whose variable occurs, as a set of 1-based indices."""
        return frozenset(i + 1 for i, e in enumerate(self.exponents) if e > 0)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    @property
    def is_one(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divided_by(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))


def monomial_of_set(n: int, vertices: Iterable[int]) -> Monomial:
    """The squarefree monomial whose support is `vertices`."""
    exps = [0] * n
    for v in vertices:
        exps[v - 1] = 1
    return Monomial(tuple(exps))


@dataclass(frozen=True)
class MonomialIdeal:
    """A proper nonzero monomial ideal, stored by its minimal generators.

    The constructor validates the invariants; use :func:`make_ideal` to build
    an ideal from an arbitrary generating set (it discards redundant
    generators instead of rejecting them).
    """

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient variable count must be positive")
        gens = tuple(sorted(set(self.gens)))
        object.__setattr__(self, "gens", gens)
        if not gens:
            raise EmptyGeneratorSet("an ideal needs at least one generator")
        for g in gens:
            if g.n != self.n:
                raise LengthMismatch(f"{g} has length {g.n}, ambient n = {self.n}")
            if g.is_one:
                raise ValueError("the unit monomial generates the improper ideal")
        for g in gens:
            if any(h is not g and h.divides(g) for h in gens):
                raise ValueError(f"generator set is not division-minimal: {g} is redundant")

    @property
    def max_degree(self) -> int:
        return max(g.degree for g in self.gens)

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        """Monomial membership: m lies in the ideal iff some generator divides it."""
        return any(g.divides(m) for g in self.gens)


def make_ideal(n: int, raw: Iterable[Monomial]) -> MonomialIdeal:
    """Build an ideal from any generating set, keeping the minimal generators.

    A monomial is kept iff no *other* given monomial divides it (ties between
    equal monomials collapse first).  Idempotent.
    """
    monomials = sorted(set(raw))
    if not monomials:
        raise EmptyGeneratorSet("an ideal needs at least one generator")
    for m in monomials:
        if m.n != n:
            raise LengthMismatch(f"{m} has length {m.n}, ambient n = {n}")
    minimal = [
        g
        for g in monomials
        if not any(h != g and h.divides(g) for h in monomials)
    ]
    return MonomialIdeal(n, tuple(minimal))


@dataclass(frozen=True)
class Clutter:
    """An antichain of nonempty circuits on the vertex set {1..n}."""

    n: int
    circuits: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be positive")
        circuits = sort_sets(self.circuits)
        object.__setattr__(self, "circuits", circuits)
        for e in circuits:
            if not e:
                raise ValueError("circuits must be nonempty")
            if not all(1 <= v <= self.n for v in e):
                raise ValueError(f"circuit {set_key(e)} leaves the vertex range 1..{self.n}")
        for e in circuits:
            for f in circuits:
                if e != f and e <= f:
                    raise ValueError(
                        f"not an antichain: {set_key(e)} is contained in {set_key(f)}"
                    )

    @property
    def support(self) -> frozenset[int]:
        """Non-isolated vertices: those appearing in at least one circuit."""
        out: set[int] = set()
        for e in self.circuits:
            out |= e
        return frozenset(out)

    @property
    def isolated_vertices(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.support

    @property
    def uniform_size(self) -> int | None:
        """Common circuit cardinality d, or None if sizes are mixed."""
        sizes = {len(e) for e in self.circuits}
        return sizes.pop() if len(sizes) == 1 else None


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on {1..n}, stored by its facet antichain."""

    n: int
    facets: tuple[frozenset[int], ...]

    def __post_init__(self):
        facets = sort_sets(self.facets)
        object.__setattr__(self, "facets", facets)
        for f in facets:
            if not all(1 <= v <= self.n for v in f):
                raise ValueError(f"facet {set_key(f)} leaves the vertex range 1..{self.n}")
        for f in facets:
            for g in facets:
                if f != g and f <= g:
                    raise ValueError("facets must form an antichain")

    def is_face(self, s: frozenset[int]) -> bool:
        return any(s <= f for f in self.facets)


@dataclass(frozen=True)
class PolarizationResult:
    """A squarefree ideal in extended variables plus the slot bookkeeping.

    ``var_map[k]`` describes the (n + k + 1)-th variable of the extended ring
    as the pair (original vertex, exponent slot >= 2).
    """

    ideal: MonomialIdeal
    var_map: tuple[tuple[int, int], ...]

    @property
    def original_n(self) -> int:
        return self.ideal.n - len(self.var_map)


def ideal_to_clutter(ideal: MonomialIdeal) -> Clutter:
    """Circuits of the squarefree ideal: the generator supports."""
    if not ideal.is_squarefree:
        raise NotSquarefree("only squarefree ideals correspond to clutters")
    return Clutter(ideal.n, tuple(g.support for g in ideal.gens))


def clutter_to_ideal(clutter: Clutter) -> MonomialIdeal:
    """The circuit ideal: one squarefree generator per circuit."""
    gens = tuple(monomial_of_set(clutter.n, e) for e in clutter.circuits)
    return MonomialIdeal(clutter.n, gens)


def open_neighborhood(clutter: Clutter, vertices: Iterable[int]) -> frozenset[int]:
    """Vertices v outside A with A + v inside some circuit."""
    a = frozenset(vertices)
    if not all(1 <= v <= clutter.n for v in a):
        raise ValueError("neighborhood query leaves the vertex range")
    out: set[int] = set()
    for e in clutter.circuits:
        if a <= e:
            out |= e - a
    return frozenset(out)


def _minimalize_masks(masks: Iterable[int]) -> list[int]:
    """Keep the inclusion-minimal bit masks of a family."""
    ordered = sorted(set(masks), key=lambda m: (bin(m).count("1"), m))
    kept: list[int] = []
    for m in ordered:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _mask(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << (v - 1)
    return out


def _unmask(mask: int, n: int) -> frozenset[int]:
    return frozenset(v for v in range(1, n + 1) if mask >> (v - 1) & 1)


def minimal_transversals(clutter: Clutter) -> tuple[frozenset[int], ...]:
    """All minimal vertex covers of the clutter, by iterative expansion.

    Circuits are folded in one at a time: covers already hitting the new
    circuit survive unchanged, the rest branch over the circuit's vertices,
    and the family is re-minimalized after every step.
    """
    covers = [0]
    for e in clutter.circuits:
        e_mask = _mask(e)
        nxt = [c for c in covers if c & e_mask]
        for c in covers:
            if not c & e_mask:
                nxt.extend(c | 1 << (v - 1) for v in e)
        covers = _minimalize_masks(nxt)
    return tuple(sorted((_unmask(c, clutter.n) for c in covers), key=set_key))


def minimal_primes(ideal: MonomialIdeal) -> tuple[frozenset[int], ...]:
    """Supports F of the minimal prime components P_F of a squarefree ideal.

    These are exactly the minimal transversals of the circuit clutter: P_F
    contains every generator iff F meets every support, and minimality of the
    prime matches minimality of the cover.
    """
    return minimal_transversals(ideal_to_clutter(ideal))


def stanley_reisner_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose nonface ideal is the given squarefree ideal.

    Facets are the complements of the minimal prime supports.  When the ideal
    has a linear generator x_v, vertex v lies in no facet; facets are used as
    computed, without padding singleton faces.
    """
    everything = frozenset(range(1, ideal.n + 1))
    return SimplicialComplex(ideal.n, tuple(everything - f for f in minimal_primes(ideal)))


def polarize(ideal: MonomialIdeal) -> PolarizationResult:
    """Split exponent powers into fresh squarefree slot variables.

    Vertex i of maximal exponent a_i contributes slot variables for exponents
    2..a_i; a generator with exponent e on x_i becomes
    x_i^min(e,1) * Y_{i,2} * ... * Y_{i,e}.  Vertices absent from every
    generator get no slots.  Generator count and degrees are preserved, and
    substituting every slot variable back to x_i recovers the generator.
    """
    n = ideal.n
    max_exp = [max(g.exponents[i] for g in ideal.gens) for i in range(n)]
    var_map: list[tuple[int, int]] = []
    slot_index: dict[tuple[int, int], int] = {}
    for i in range(n):
        for j in range(2, max_exp[i] + 1):
            slot_index[(i + 1, j)] = n + len(var_map)
            var_map.append((i + 1, j))
    n_ext = n + len(var_map)
    new_gens = []
    for g in ideal.gens:
        exps = [0] * n_ext
        for i, e in enumerate(g.exponents):
            if e >= 1:
                exps[i] = 1
            for j in range(2, e + 1):
                exps[slot_index[(i + 1, j)]] = 1
        new_gens.append(Monomial(tuple(exps)))
    return PolarizationResult(MonomialIdeal(n_ext, tuple(new_gens)), tuple(var_map))


def depolarize(result: PolarizationResult) -> MonomialIdeal:
    """Substitute every slot variable back to its original variable."""
    n = result.original_n
    gens = []
    for g in result.ideal.gens:
        exps = list(g.exponents[:n])
        for k, (orig, _slot) in enumerate(result.var_map):
            exps[orig - 1] += g.exponents[n + k]
        gens.append(Monomial(tuple(exps)))
    return make_ideal(n, gens)


def product_ideal(n: int, families: Iterable[Iterable[int]]) -> MonomialIdeal:
    """The product P_{F_1} * ... * P_{F_d} of variable primes, minimalized."""
    parts = [sorted(set(f)) for f in families]
    if any(not p for p in parts):
        raise ValueError("prime supports must be nonempty")
    gens = []
    for pick in _cartesian(*parts):
        exps = [0] * n
        for v in pick:
            exps[v - 1] += 1
        gens.append(Monomial(tuple(exps)))
    return make_ideal(n, gens)
