"""Vertex tests on the Newton polyhedron of a monomial ideal.

The polyhedron is conv(exponents of the minimal generators) + R_{>=0}^n; a
generator exponent a_j is a vertex iff it cannot be written as a convex
combination of the other generator exponents plus a nonnegative ray part.
That is an exact rational LP:

    sum_i lambda_i a_i + sum_k mu_k e_k = a_j,   sum_i lambda_i = 1,
    lambda, mu >= 0   (i ranging over the other generators)

feasible  <=>  a_j is not a vertex, and the solution is a checkable witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Monomial, MonomialIdeal
from .errors import NotAGenerator
from .linprog import solve_eq_nonneg


@dataclass(frozen=True)
class VertexCertificate:
    """Verdict of a vertex test, with a replayable witness when negative.

    For a non-vertex, ``lambdas`` holds the nonzero convex coefficients on
    the other generators and ``ray_multipliers`` the n coordinate-ray
    multipliers; together they reproduce the tested exponent vector exactly.
    """

    is_vertex: bool
    lambdas: tuple[tuple[Monomial, Fraction], ...] = ()
    ray_multipliers: tuple[Fraction, ...] = ()

    def verify(self, ideal: MonomialIdeal, generator: Monomial) -> bool:
        """Replay a NotVertex witness by exact substitution."""
        if self.is_vertex:
            return True
        if any(lam < 0 for _, lam in self.lambdas):
            return False
        if any(mu < 0 for mu in self.ray_multipliers):
            return False
        if sum(lam for _, lam in self.lambdas) != 1:
            return False
        others = set(ideal.gens) - {generator}
        if any(g not in others for g, _ in self.lambdas):
            return False
        n = ideal.n
        total = [Fraction(0)] * n
        for g, lam in self.lambdas:
            for k in range(n):
                total[k] += lam * g.exponents[k]
        for k in range(n):
            total[k] += self.ray_multipliers[k]
        return all(total[k] == generator.exponents[k] for k in range(n))


def is_vertex(ideal: MonomialIdeal, generator: Monomial) -> VertexCertificate:
    """Decide whether a minimal generator is a vertex of the Newton polyhedron."""
    if generator not in ideal.gens:
        raise NotAGenerator(f"{generator} is not a minimal generator")
    others = [g for g in ideal.gens if g != generator]
    if not others:
        # A single generator: the convexity equation has no unknowns to carry
        # weight 1, so the system is vacuously infeasible.
        return VertexCertificate(True)
    n = ideal.n
    rows = []
    for k in range(n):
        rows.append([g.exponents[k] for g in others] + [1 if j == k else 0 for j in range(n)])
    rows.append([1] * len(others) + [0] * n)
    rhs = list(generator.exponents) + [1]
    sol = solve_eq_nonneg(rows, rhs)
    if sol is None:
        return VertexCertificate(True)
    lambdas = tuple((g, sol[i]) for i, g in enumerate(others) if sol[i] != 0)
    mus = tuple(sol[len(others) + k] for k in range(n))
    return VertexCertificate(False, lambdas, mus)


def _vertex_generators_degree_two(ideal: MonomialIdeal) -> tuple[Monomial, ...]:
    """Degree <= 2 shortcut: pure powers always; an edge x_i x_j drops out
    exactly when both squares x_i^2 and x_j^2 are generators."""
    squares = {
        next(iter(g.support))
        for g in ideal.gens
        if len(g.support) == 1 and g.degree == 2
    }
    out = []
    for g in ideal.gens:
        if len(g.support) == 2:
            i, j = sorted(g.support)
            if i in squares and j in squares:
                continue
        out.append(g)
    return tuple(out)


def vertex_generators(ideal: MonomialIdeal, method: str = "auto") -> tuple[Monomial, ...]:
    """The minimal generators whose exponent vectors are polyhedron vertices.

    ``method="auto"`` uses the structural shortcuts (squarefree: every
    generator; degree <= 2: the square/edge rule) and falls back to the LP
    test; ``method="lp"`` forces the LP on every generator.
    """
    if method not in ("auto", "lp"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        if ideal.is_squarefree:
            return ideal.gens
        if ideal.max_degree <= 2:
            return _vertex_generators_degree_two(ideal)
    return tuple(g for g in ideal.gens if is_vertex(ideal, g).is_vertex)
