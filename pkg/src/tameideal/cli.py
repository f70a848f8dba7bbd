"""Command line front end: ideal-expression parser, dispatch, reporting.

Expressions follow the grammar

    ideal  := group ('*' group)*
    group  := '(' term (',' term)* ')' | term (',' term)*
    term   := factor ('*' factor)*
    factor := var ('^' uint)?
    var    := letter followed by optional digits

optionally preceded by a header ``vars x,y,z;`` that pins the variable order
and the ambient count.  Without a header, names of the shape x1..xk over one
common letter are indexed by their suffix (n = largest suffix); any other mix
of names is indexed in first-appearance order.  Product expressions expand to
division-minimal generator sets before analysis.

Exit codes: 0 = verdict computed, 1 = input error, 2 = internal check failure
(oracle disagreement or an exhausted search budget).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass

from . import rees as rees_mod
from .charts import DEFAULT_NODE_BUDGET, LaurentMonomial, is_chart_regular
from .core import (
    Monomial,
    MonomialIdeal,
    depolarize,
    make_ideal,
    minimal_primes,
    polarize,
    stanley_reisner_complex,
)
from .errors import (
    IdealSyntaxError,
    InternalCheckFailed,
    SearchBudgetExceeded,
    TameIdealError,
    UnknownVariable,
    Unsupported,
)
from .tameness import (
    METHOD_POLARIZATION,
    BipartiteProduct,
    ChartSizesWitness,
    DisjointPrimesWitness,
    FailingChartWitness,
    IntersectingPrimesWitness,
    LinearPrime,
    LoopedStar,
    NestedPrimeProduct,
    NotTameDeg2,
    PrimeSquare,
    TamenessReport,
    classify_deg2,
    decide,
    is_tame_general,
)

_TOKEN_RE = re.compile(r"\s*(?:(?P<name>[A-Za-z][0-9]*)|(?P<int>[0-9]+)|(?P<sym>[(),*^]))")
_VARS_HEADER_RE = re.compile(r"^\s*vars\s+(?P<list>[^;]+);")


@dataclass(frozen=True)
class ParsedIdeal:
    ideal: MonomialIdeal
    var_names: tuple[str, ...]

    def name_of(self, vertex: int) -> str:
        return self.var_names[vertex - 1]


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise IdealSyntaxError(f"unexpected character {stripped[0]!r}", pos)
        if match.group("name"):
            tokens.append(("name", match.group("name"), match.start("name")))
        elif match.group("int"):
            tokens.append(("int", match.group("int"), match.start("int")))
        else:
            tokens.append(("sym", match.group("sym"), match.start("sym")))
        pos = match.end()
    return tokens


class _Parser:
    """Recursive descent over the token list; yields groups of exponent maps."""

    def __init__(self, tokens: list[tuple[str, str, int]], length: int):
        self.tokens = tokens
        self.pos = 0
        self.length = length
        self.names: list[str] = []

    def _peek(self, offset: int = 0) -> tuple[str, str, int] | None:
        idx = self.pos + offset
        return self.tokens[idx] if idx < len(self.tokens) else None

    def _take(self) -> tuple[str, str, int]:
        tok = self._peek()
        if tok is None:
            raise IdealSyntaxError("unexpected end of expression", self.length)
        self.pos += 1
        return tok

    def _expect_sym(self, sym: str) -> None:
        tok = self._take()
        if tok[0] != "sym" or tok[1] != sym:
            raise IdealSyntaxError(f"expected {sym!r}", tok[2])

    def parse_ideal(self) -> list[list[dict[str, int]]]:
        groups = [self.parse_group()]
        while True:
            tok = self._peek()
            if tok is not None and tok[:2] == ("sym", "*"):
                self.pos += 1
                groups.append(self.parse_group())
            else:
                break
        tok = self._peek()
        if tok is not None:
            raise IdealSyntaxError(f"trailing input {tok[1]!r}", tok[2])
        return groups

    def parse_group(self) -> list[dict[str, int]]:
        tok = self._peek()
        if tok is None:
            raise IdealSyntaxError("expected a generator", self.length)
        if tok[:2] == ("sym", "("):
            self.pos += 1
            terms = [self.parse_term()]
            while True:
                tok = self._take()
                if tok[:2] == ("sym", ")"):
                    return terms
                if tok[:2] != ("sym", ","):
                    raise IdealSyntaxError("expected ',' or ')'", tok[2])
                terms.append(self.parse_term())
        terms = [self.parse_term()]
        while True:
            tok = self._peek()
            if tok is not None and tok[:2] == ("sym", ","):
                self.pos += 1
                terms.append(self.parse_term())
            else:
                return terms

    def parse_term(self) -> dict[str, int]:
        exps: dict[str, int] = {}
        self.parse_factor(exps)
        while True:
            tok = self._peek()
            nxt = self._peek(1)
            if (
                tok is not None
                and tok[:2] == ("sym", "*")
                and nxt is not None
                and nxt[0] == "name"
            ):
                self.pos += 1
                self.parse_factor(exps)
            else:
                return exps

    def parse_factor(self, exps: dict[str, int]) -> None:
        tok = self._take()
        if tok[0] != "name":
            raise IdealSyntaxError(f"expected a variable, found {tok[1]!r}", tok[2])
        name = tok[1]
        if name not in self.names:
            self.names.append(name)
        power = 1
        nxt = self._peek()
        if nxt is not None and nxt[:2] == ("sym", "^"):
            self.pos += 1
            exp_tok = self._take()
            if exp_tok[0] != "int":
                raise IdealSyntaxError("expected an integer exponent", exp_tok[2])
            power = int(exp_tok[1])
        exps[name] = exps.get(name, 0) + power


def _resolve_names(
    names: list[str], declared: tuple[str, ...] | None
) -> tuple[dict[str, int], tuple[str, ...]]:
    """Map variable names to 1-based vertex indices; return names per index."""
    if declared is not None:
        index = {name: k + 1 for k, name in enumerate(declared)}
        for name in names:
            if name not in index:
                raise UnknownVariable(f"variable {name!r} is not among vars {', '.join(declared)}")
        return index, tuple(declared)
    suffix_form = re.compile(r"^([A-Za-z])([1-9][0-9]*)$")
    matches = [suffix_form.match(name) for name in names]
    letters = {m.group(1) for m in matches if m is not None}
    if names and all(m is not None for m in matches) and len(letters) == 1:
        letter = letters.pop()
        n = max(int(m.group(2)) for m in matches if m is not None)
        index = {name: int(m.group(2)) for name, m in zip(names, matches) if m is not None}
        return index, tuple(f"{letter}{k}" for k in range(1, n + 1))
    index = {name: k + 1 for k, name in enumerate(names)}
    return index, tuple(names)


def parse_ideal(text: str, declared_vars: tuple[str, ...] | None = None) -> ParsedIdeal:
    """Parse an ideal expression into its division-minimal generator set."""
    header = _VARS_HEADER_RE.match(text)
    if header is not None:
        listed = tuple(v.strip() for v in header.group("list").split(","))
        for v in listed:
            if not re.fullmatch(r"[A-Za-z][0-9]*", v):
                raise IdealSyntaxError(f"bad variable name {v!r} in vars header", text.find(v))
        declared_vars = listed
        text = text[header.end() :]
    parser = _Parser(_tokenize(text), len(text))
    groups = parser.parse_ideal()
    index, var_names = _resolve_names(parser.names, declared_vars)
    n = len(var_names)

    def to_monomial(exps: dict[str, int]) -> Monomial:
        out = [0] * n
        for name, e in exps.items():
            out[index[name] - 1] += e
        return Monomial(tuple(out))

    gens = [Monomial(tuple([0] * n))]
    for group in groups:
        group_gens = [to_monomial(t) for t in group]
        gens = [g.times(t) for g in gens for t in group_gens]
    return ParsedIdeal(make_ideal(n, gens), var_names)


def parse_monomial(text: str, parsed: ParsedIdeal) -> Monomial:
    """Parse a single monomial in the variables of an already-parsed ideal."""
    parser = _Parser(_tokenize(text), len(text))
    exps = parser.parse_term()
    tok = parser._peek()
    if tok is not None:
        raise IdealSyntaxError(f"trailing input {tok[1]!r}", tok[2])
    index = {name: k + 1 for k, name in enumerate(parsed.var_names)}
    out = [0] * len(parsed.var_names)
    for name, e in exps.items():
        if name not in index:
            raise UnknownVariable(f"variable {name!r} does not occur in the ideal")
        out[index[name] - 1] += e
    return Monomial(tuple(out))


def monomial_str(m: Monomial, names: tuple[str, ...]) -> str:
    parts = []
    for k, e in enumerate(m.exponents):
        if e == 1:
            parts.append(names[k])
        elif e > 1:
            parts.append(f"{names[k]}^{e}")
    return "*".join(parts) if parts else "1"


def laurent_str(m: LaurentMonomial, names: tuple[str, ...]) -> str:
    num = []
    den = []
    for k, e in enumerate(m.exponents):
        if e >= 1:
            num.append(names[k] if e == 1 else f"{names[k]}^{e}")
        elif e <= -1:
            den.append(names[k] if e == -1 else f"{names[k]}^{-e}")
    top = "*".join(num) if num else "1"
    return f"{top}/{'*'.join(den)}" if den else top


def ideal_str(parsed: ParsedIdeal) -> str:
    return ", ".join(monomial_str(g, parsed.var_names) for g in parsed.ideal.gens)


def canonical_str(parsed: ParsedIdeal) -> str:
    """Round-trippable echo: a vars header pinning the index order, then the
    sorted minimal generators."""
    return f"vars {','.join(parsed.var_names)}; {ideal_str(parsed)}"


def vertex_set_str(vertices, names: tuple[str, ...]) -> str:
    return "{" + ",".join(names[v - 1] for v in sorted(vertices)) + "}"


def _witness_json(witness: object, names: tuple[str, ...]) -> dict:
    if isinstance(witness, DisjointPrimesWitness):
        return {"type": "disjoint-primes", "parts": [sorted(p) for p in witness.parts]}
    if isinstance(witness, IntersectingPrimesWitness):
        return {
            "type": "intersecting-primes",
            "first": sorted(witness.first),
            "second": sorted(witness.second),
        }
    if isinstance(witness, ChartSizesWitness):
        return {
            "type": "chart-sizes",
            "entries": [
                {"center": monomial_str(c, names), "size": s} for c, s in witness.entries
            ],
        }
    if isinstance(witness, FailingChartWitness):
        return {
            "type": "failing-chart",
            "center": monomial_str(witness.center, names),
            "reduced_size": witness.reduced_size,
            "ambient": witness.ambient,
        }
    if isinstance(witness, LinearPrime):
        return {"type": "degree2-form", "form": "LinearPrime", "F": sorted(witness.vertices)}
    if isinstance(witness, PrimeSquare):
        return {"type": "degree2-form", "form": "PrimeSquare", "F": sorted(witness.vertices)}
    if isinstance(witness, LoopedStar):
        return {
            "type": "degree2-form",
            "form": "LoopedStar",
            "F": sorted(witness.vertices),
            "center": witness.center,
        }
    if isinstance(witness, BipartiteProduct):
        return {
            "type": "degree2-form",
            "form": "BipartiteProduct",
            "F1": sorted(witness.first),
            "F2": sorted(witness.second),
        }
    if isinstance(witness, NestedPrimeProduct):
        return {
            "type": "degree2-form",
            "form": "NestedPrimeProduct",
            "F1": sorted(witness.inner),
            "F2": sorted(witness.outer),
        }
    if isinstance(witness, NotTameDeg2):
        return {"type": "degree2-form", "form": "NotTame", "reason": witness.reason}
    return {"type": "none"}


def _witness_text(witness: object, names: tuple[str, ...]) -> str:
    if isinstance(witness, DisjointPrimesWitness):
        return "primes: " + ", ".join(vertex_set_str(p, names) for p in witness.parts)
    if isinstance(witness, IntersectingPrimesWitness):
        return (
            f"intersecting primes: {vertex_set_str(witness.first, names)} and "
            f"{vertex_set_str(witness.second, names)}"
        )
    if isinstance(witness, ChartSizesWitness):
        sizes = ", ".join(f"{monomial_str(c, names)}:{s}" for c, s in witness.entries)
        return f"vertex charts: {sizes}"
    if isinstance(witness, FailingChartWitness):
        return (
            f"failing vertex chart: {monomial_str(witness.center, names)}; "
            f"|U'| = {witness.reduced_size} > n = {witness.ambient}"
        )
    if isinstance(witness, LinearPrime):
        return f"form: LinearPrime; F = {vertex_set_str(witness.vertices, names)}"
    if isinstance(witness, PrimeSquare):
        return f"form: PrimeSquare; F = {vertex_set_str(witness.vertices, names)}"
    if isinstance(witness, LoopedStar):
        return (
            f"form: LoopedStar; F = {vertex_set_str(witness.vertices, names)}; "
            f"center = {names[witness.center - 1]}"
        )
    if isinstance(witness, BipartiteProduct):
        return (
            f"form: BipartiteProduct; F1 = {vertex_set_str(witness.first, names)}; "
            f"F2 = {vertex_set_str(witness.second, names)}"
        )
    if isinstance(witness, NestedPrimeProduct):
        return (
            f"form: NestedPrimeProduct; F1 = {vertex_set_str(witness.inner, names)}; "
            f"F2 = {vertex_set_str(witness.outer, names)}"
        )
    if isinstance(witness, NotTameDeg2):
        return f"form: NotTame; reason: {witness.reason}"
    return ""


def binomial_json(b: rees_mod.Binomial) -> list[dict]:
    def term(sign: int, t: rees_mod.Term) -> dict:
        return {
            "sign": sign,
            "x": list(t.x),
            "t": {str(k + 1): e for k, e in enumerate(t.t) if e},
        }

    return [term(1, b.plus), term(-1, b.minus)]


def binomial_str(b: rees_mod.Binomial, names: tuple[str, ...]) -> str:
    def term(t: rees_mod.Term) -> str:
        parts = []
        for k, e in enumerate(t.x):
            if e == 1:
                parts.append(names[k])
            elif e > 1:
                parts.append(f"{names[k]}^{e}")
        for k, e in enumerate(t.t):
            if e == 1:
                parts.append(f"T{k + 1}")
            elif e > 1:
                parts.append(f"T{k + 1}^{e}")
        return "*".join(parts) if parts else "1"

    return f"{term(b.plus)} - {term(b.minus)}"


class _Clock:
    def __init__(self):
        self.start = time.perf_counter()
        self.marks: dict[str, float] = {}

    def mark(self, label: str) -> None:
        now = time.perf_counter()
        self.marks[label] = round((now - self.start) * 1000.0, 3)
        self.start = now


def _emit(payload: dict, lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _oracle_check(report: TamenessReport, ideal: MonomialIdeal, budget: int) -> None:
    """Cross-check a structural verdict against the chart decider."""
    if report.method == "charts":
        return
    chart_report = is_tame_general(ideal, node_budget=budget)
    if chart_report.tame != report.tame:
        raise InternalCheckFailed(
            f"oracle disagreement: {report.method} says tame={report.tame}, "
            f"charts say tame={chart_report.tame}"
        )


def _cmd_check(parsed: ParsedIdeal, args, clock: _Clock) -> tuple[dict, list[str]]:
    report = decide(parsed.ideal, node_budget=args.max_search)
    if args.oracle:
        _oracle_check(report, parsed.ideal, args.max_search)
    clock.mark("compute_ms")
    names = parsed.var_names
    verdict = "tame" if report.tame else "not tame"
    payload = {
        "verdict": verdict,
        "method": report.method,
        "witness": _witness_json(report.witness, names),
    }
    head = "TAME" if report.tame else "NOT TAME"
    detail = _witness_text(report.witness, names)
    if report.tame:
        lines = [f"{head}; method: {report.method}; {detail}"]
    elif isinstance(report.witness, FailingChartWitness):
        lines = [f"{head}; {detail}"]
    else:
        lines = [f"{head}; method: {report.method}; {detail}"]
    return payload, lines


def _cmd_decompose(parsed: ParsedIdeal, args, clock: _Clock) -> tuple[dict, list[str]]:
    ideal = parsed.ideal
    names = parsed.var_names
    primes = minimal_primes(ideal)
    complex_ = stanley_reisner_complex(ideal)
    everything = frozenset(range(1, ideal.n + 1))
    facets_by_prime = [everything - p for p in primes]
    report = decide(ideal, node_budget=args.max_search)
    if args.oracle:
        _oracle_check(report, ideal, args.max_search)
    clock.mark("compute_ms")
    payload = {
        "verdict": "tame" if report.tame else "not tame",
        "method": report.method,
        "witness": {
            "type": "decomposition",
            "primes": [sorted(p) for p in primes],
            "facets": [sorted(f) for f in facets_by_prime],
            "facet_antichain": [sorted(f) for f in complex_.facets],
        },
    }
    lines = [
        "primes: " + ", ".join(vertex_set_str(p, names) for p in primes),
        "facets: " + ", ".join(vertex_set_str(f, names) for f in facets_by_prime),
        f"tame: {'true' if report.tame else 'false'}",
    ]
    return payload, lines


def _cmd_classify(parsed: ParsedIdeal, args, clock: _Clock) -> tuple[dict, list[str]]:
    classification = classify_deg2(parsed.ideal)
    if args.oracle:
        chart_report = is_tame_general(parsed.ideal, node_budget=args.max_search)
        if chart_report.tame != classification.is_tame:
            raise InternalCheckFailed(
                f"oracle disagreement: classifier says tame={classification.is_tame}, "
                f"charts say tame={chart_report.tame}"
            )
    clock.mark("compute_ms")
    names = parsed.var_names
    payload = {
        "verdict": "tame" if classification.is_tame else "not tame",
        "method": "degree2",
        "witness": _witness_json(classification, names),
    }
    lines = [
        _witness_text(classification, names),
        f"tame: {'true' if classification.is_tame else 'false'}",
    ]
    return payload, lines


def _polarized_names(parsed: ParsedIdeal, var_map) -> tuple[str, ...]:
    taken = set(parsed.var_names)
    letter = next(
        (c for c in "YZWVUTSRQP" if all(not v.startswith(c) for v in taken)), "Y"
    )
    extra = tuple(f"{letter}{i}{j}" for i, j in var_map)
    return parsed.var_names + extra


def _cmd_polarize(parsed: ParsedIdeal, args, clock: _Clock) -> tuple[dict, list[str]]:
    result = polarize(parsed.ideal)
    names = _polarized_names(parsed, result.var_map)
    extended = ParsedIdeal(result.ideal, names)
    assert depolarize(result) == parsed.ideal
    clock.mark("compute_ms")
    payload = {
        "verdict": "polarized",
        "method": METHOD_POLARIZATION,
        "witness": {
            "type": "polarization",
            "canonical": canonical_str(extended),
            "var_map": {
                names[len(parsed.var_names) + k]: [orig, slot]
                for k, (orig, slot) in enumerate(result.var_map)
            },
        },
    }
    lines = [
        f"polarized: {ideal_str(extended)}",
        f"vars: {','.join(names)}",
        "slots: "
        + (
            ", ".join(
                f"{names[len(parsed.var_names) + k]} = ({parsed.var_names[orig - 1]}, slot {slot})"
                for k, (orig, slot) in enumerate(result.var_map)
            )
            if result.var_map
            else "none"
        ),
        f"canonical: {canonical_str(extended)}",
    ]
    return payload, lines


def _rees_context(parsed: ParsedIdeal, args) -> tuple[rees_mod.PartitionedClutter, list[str]]:
    """Resolve the partitioned clutter whose equations describe the ideal."""
    ideal = parsed.ideal
    notes: list[str] = []
    if ideal.is_squarefree:
        try:
            return rees_mod.partitioned_clutter_from_ideal(ideal), notes
        except ValueError:
            raise Unsupported("the ideal is not tame; no binomial presentation is emitted")
    if ideal.max_degree <= 2:
        classification = classify_deg2(ideal)
        if isinstance(classification, (PrimeSquare, NestedPrimeProduct)):
            raise Unsupported(
                "equations of repeated or nested prime products are outside "
                "the supported classes"
            )
        if isinstance(classification, LoopedStar):
            parts = [classification.vertices]
            notes.append(
                "equations coincide with those of the underlying prime; "
                "T-variables correspond to its variables"
            )
            return rees_mod.partitioned_clutter_from_parts(ideal.n, parts), notes
        raise Unsupported("no binomial presentation for a non-tame degree-2 ideal")
    raise Unsupported(
        "binomial presentations are emitted for tame squarefree ideals "
        "and tame degree-2 forms only"
    )


def _cmd_rees(parsed: ParsedIdeal, args, clock: _Clock) -> tuple[dict, list[str]]:
    pc, notes = _rees_context(parsed, args)
    gens = rees_mod.rees_generators(pc)
    if not rees_mod.verify_rees(gens, pc):
        raise InternalCheckFailed("emitted generators fail the substitution check")
    clock.mark("compute_ms")
    names = parsed.var_names
    legend = [
        f"T{k + 1} = {monomial_str(Monomial(tuple(1 if v + 1 in e else 0 for v in range(pc.n))), names)}"
        for k, e in enumerate(pc.circuits)
    ]
    payload = {
        "verdict": "emitted",
        "method": "swap-binomials",
        "witness": {
            "type": "rees-generators",
            "circuits": [sorted(e) for e in pc.circuits],
            "parts": [sorted(p) for p in pc.parts],
            "binomials": [binomial_json(b) for b in gens],
            "notes": notes,
        },
    }
    lines = [*notes, "T-legend: " + "; ".join(legend), f"generators ({len(gens)}):"]
    lines.extend(f"  {binomial_str(b, names)}" for b in gens)
    return payload, lines


def _cmd_verify_rees(parsed: ParsedIdeal, args, clock: _Clock) -> tuple[dict, list[str]]:
    pc, notes = _rees_context(parsed, args)
    gens = rees_mod.rees_generators(pc)
    substitution_ok = rees_mod.verify_rees(gens, pc)
    containment = [
        rees_mod.chart_contained_in_dehomogenization(pc, e, gens) for e in pc.circuits
    ]
    linear, fiber = rees_mod.fiber_type_split(gens)
    ok = substitution_ok and all(containment)
    clock.mark("compute_ms")
    if not ok:
        raise InternalCheckFailed("rees verification failed")
    payload = {
        "verdict": "pass",
        "method": "swap-binomials",
        "witness": {
            "type": "rees-verification",
            "generators": len(gens),
            "substitution": substitution_ok,
            "chart_containment": containment,
            "linear_part": len(linear),
            "fiber_part": len(fiber),
            "notes": notes,
        },
    }
    lines = [
        *notes,
        f"generators: {len(gens)}",
        f"substitution check: {'PASS' if substitution_ok else 'FAIL'}",
        f"chart containment: PASS ({len(containment)}/{len(containment)} charts)",
        f"fiber split: linear={len(linear)} fiber={len(fiber)}",
    ]
    return payload, lines


def _cmd_chart(parsed: ParsedIdeal, args, clock: _Clock) -> tuple[dict, list[str]]:
    ideal = parsed.ideal
    if args.center is None:
        raise TameIdealError("chart requires --center <k|monomial>")
    if re.fullmatch(r"[0-9]+", args.center):
        k = int(args.center)
        if not 1 <= k <= len(ideal.gens):
            raise TameIdealError(
                f"center index {k} out of range 1..{len(ideal.gens)}"
            )
        center = ideal.gens[k - 1]
    else:
        center = parse_monomial(args.center, parsed)
    report = is_chart_regular(ideal, center, node_budget=args.max_search)
    clock.mark("compute_ms")
    names = parsed.var_names
    payload = {
        "verdict": "regular" if report.regular else "not regular",
        "method": "chart-reduction",
        "witness": {
            "type": "chart",
            "center": monomial_str(center, names),
            "U": [list(g.exponents) for g in sorted(report.algebra.gens)],
            "U_min": [list(g.exponents) for g in report.reduced],
            "size": report.reduced_size,
        },
    }
    lines = [
        f"center: {monomial_str(center, names)}",
        "U  = {" + ", ".join(laurent_str(g, names) for g in sorted(report.algebra.gens)) + "}",
        "U' = {" + ", ".join(laurent_str(g, names) for g in report.reduced) + "}",
        f"|U'| = {report.reduced_size}; n = {ideal.n}; regular: "
        f"{'yes' if report.regular else 'no'}",
    ]
    return payload, lines


_COMMANDS = {
    "check": _cmd_check,
    "decompose": _cmd_decompose,
    "classify-deg2": _cmd_classify,
    "polarize": _cmd_polarize,
    "rees": _cmd_rees,
    "verify-rees": _cmd_verify_rees,
    "chart": _cmd_chart,
}


def _build_argparser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="tameideal",
        description="Decide blowup regularity of monomial ideals and emit "
        "Rees algebra equations for the tame squarefree ones.",
    )
    sub = top.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("expression", help="ideal expression, e.g. '(x,y*z)*(x,y)'")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument(
            "--oracle",
            action="store_true",
            help="cross-check structural verdicts against the chart decider",
        )
        p.add_argument(
            "--max-search",
            type=int,
            default=DEFAULT_NODE_BUDGET,
            metavar="N",
            help="node budget for the integer cone search",
        )
        p.add_argument(
            "--vars",
            type=str,
            default=None,
            metavar="LIST",
            help="comma-separated variable order, e.g. x,y,z",
        )
        if name == "chart":
            p.add_argument(
                "--center",
                type=str,
                default=None,
                metavar="K|MONOMIAL",
                help="chart center: 1-based generator index or a monomial",
            )
    return top


def main(argv: list[str] | None = None) -> int:
    args = _build_argparser().parse_args(argv)
    clock = _Clock()
    try:
        declared = (
            tuple(v.strip() for v in args.vars.split(",")) if args.vars else None
        )
        parsed = parse_ideal(args.expression, declared)
        clock.mark("parse_ms")
        payload, lines = _COMMANDS[args.command](parsed, args, clock)
    except (SearchBudgetExceeded, InternalCheckFailed) as exc:
        print(f"internal check failure: {exc}", file=sys.stderr)
        return 2
    except (TameIdealError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    payload.update(
        {
            "command": args.command,
            "input": {"expression": args.expression, "canonical": canonical_str(parsed)},
            "timings": clock.marks,
        }
    )
    _emit(payload, lines, args.json)
    return 0


if __name__ == "__main__":
    sys.exit(main())
