"""Acceptance suite: one test per exit criterion, exact values throughout.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one pass line per
criterion.  Every assertion is exact (integer or set equality); the timed
criteria also assert their runtime ceilings.
"""

import itertools
import json
import random
import time

from tameideal.charts import LaurentMonomial, is_chart_regular
from tameideal.cli import main, parse_ideal
from tameideal.core import Clutter, Monomial, clutter_to_ideal, make_ideal
from tameideal.newton import is_vertex
from tameideal.rees import (
    chart_contained_in_dehomogenization,
    fiber_type_split,
    partitioned_clutter_from_parts,
    rees_generators,
    verify_rees,
    _term,
    make_binomial,
)
from tameideal.tameness import classify_deg2, is_tame_general, is_tame_squarefree

from conftest import (
    canonical_clutter_key,
    enumerate_antichains,
    graph_items,
    ideal_from_graph_code,
    random_squarefree_ideal,
)
from oracles import truncated_vertex_oracle


def M(*exps):
    return Monomial(tuple(exps))


def L(*exps):
    return LaurentMonomial(tuple(exps))


def test_criterion_1_introduction_examples(capsys):
    start = time.perf_counter()
    assert main(["check", "(x,y*z)"]) == 0
    first = capsys.readouterr().out
    assert first.startswith("NOT TAME")
    first_elapsed = time.perf_counter() - start

    start = time.perf_counter()
    assert main(["check", "--json", "(x,y*z)*(x,y)*(x,z)"]) == 0
    payload = json.loads(capsys.readouterr().out)
    second_elapsed = time.perf_counter() - start
    assert payload["verdict"] == "tame"
    assert payload["method"] == "charts"
    assert first_elapsed < 1.0 and second_elapsed < 1.0
    print(
        f"ACCEPTANCE 1: PASS - (x,yz) not tame, (x,yz)(x,y)(x,z) tame via charts "
        f"({first_elapsed * 1000:.0f} ms / {second_elapsed * 1000:.0f} ms)"
    )


def test_criterion_2_mixed_degree_charts():
    parsed = parse_ideal("x^2, y^3, x*y")
    report = is_tame_general(parsed.ideal)
    assert report.tame
    expected = {
        M(2, 0): {L(1, 0), L(-1, 1)},  # x and y/x
        M(0, 3): {L(0, 1), L(1, -2)},  # y and x/y^2
        M(1, 1): {L(-1, 2), L(1, -1)},  # y^2/x and x/y
    }
    for center, reduced_set in expected.items():
        chart_report = is_chart_regular(parsed.ideal, center)
        assert chart_report.regular
        assert set(chart_report.reduced) == reduced_set
    print("ACCEPTANCE 2: PASS - x^2,y^3,xy tame with charts {x,y/x}, {y,x/y^2}, {y^2/x,x/y}")


def test_criterion_3_rees_presentation(capsys):
    assert main(["rees", "--json", "(x1,x2)*(y1,y2)*(z)"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["witness"]["binomials"]) == 5

    pc = partitioned_clutter_from_parts(5, [{1, 2}, {3, 4}, {5}])
    gens = rees_generators(pc)
    n, m = 5, 4
    expected = {
        make_binomial(_term(n, m, [2], [0]), _term(n, m, [1], [2])),  # x2 T1 - x1 T3
        make_binomial(_term(n, m, [2], [1]), _term(n, m, [1], [3])),  # x2 T2 - x1 T4
        make_binomial(_term(n, m, [3], [3]), _term(n, m, [4], [2])),  # y1 T4 - y2 T3
        make_binomial(_term(n, m, [4], [0]), _term(n, m, [3], [1])),  # y2 T1 - y1 T2
        make_binomial(_term(n, m, [], [1, 2]), _term(n, m, [], [0, 3])),  # T2 T3 - T1 T4
    }
    assert set(gens) == expected  # canonical forms absorb sign and order
    assert verify_rees(gens, pc)
    print("ACCEPTANCE 3: PASS - the 5 canonical binomials and the substitution check are green")


def test_criterion_4_polarization_pipeline(capsys):
    assert main(["classify-deg2", "--json", "x1^2, x1*x2, x2^2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["witness"]["form"] == "PrimeSquare"
    assert payload["verdict"] == "tame"

    assert main(["polarize", "--json", "x1^2, x1*x2, x2^2"]) == 0
    canonical = json.loads(capsys.readouterr().out)["witness"]["canonical"]
    assert main(["check", "--json", canonical]) == 0
    verdict = json.loads(capsys.readouterr().out)["verdict"]
    assert verdict == "not tame"
    print("ACCEPTANCE 4: PASS - PrimeSquare is tame while its polarization is not")


def test_criterion_5_structural_vs_charts_equivalence():
    start = time.perf_counter()
    reps = {}
    for n in (1, 2, 3, 4, 5):
        for circuits in enumerate_antichains(n, 6):
            key = (n, canonical_clutter_key(n, circuits))
            if key not in reps:
                reps[key] = Clutter(n, circuits)
    disagreements = 0
    for clutter in reps.values():
        ideal = clutter_to_ideal(clutter)
        if is_tame_squarefree(ideal).tame != is_tame_general(ideal).tame:
            disagreements += 1
    checked = len(reps)

    rng = random.Random(550)
    random_checked = 0
    while random_checked < 1000:
        n = rng.randint(1, 7)
        ideal = random_squarefree_ideal(rng, n)
        if is_tame_squarefree(ideal).tame != is_tame_general(ideal).tame:
            disagreements += 1
        random_checked += 1
    elapsed = time.perf_counter() - start
    assert disagreements == 0
    assert elapsed <= 300.0
    print(
        f"ACCEPTANCE 5: PASS - {checked} clutter classes (n <= 5, <= 6 circuits) "
        f"+ {random_checked} random squarefree ideals (n <= 7), zero disagreements "
        f"in {elapsed:.1f}s"
    )


def test_criterion_6_degree2_equivalence():
    start = time.perf_counter()
    checked = 0
    for n in (1, 2, 3, 4, 5):
        items = graph_items(n)
        for code in range(1, 2 ** len(items)):
            ideal = ideal_from_graph_code(n, items, code)
            assert classify_deg2(ideal).is_tame == is_tame_general(ideal).tame, (
                n,
                ideal.gens,
            )
            checked += 1
    elapsed = time.perf_counter() - start
    assert elapsed <= 120.0
    print(
        f"ACCEPTANCE 6: PASS - {checked} loop/edge ideals (n <= 5, exhaustive), "
        f"classifier == charts, zero disagreements in {elapsed:.1f}s"
    )


def test_criterion_7_rees_soundness():
    start = time.perf_counter()
    instances = 0
    for d in (1, 2, 3):
        for sizes in itertools.combinations_with_replacement((1, 2, 3), d):
            next_vertex = 1
            parts = []
            for s in sizes:
                parts.append(set(range(next_vertex, next_vertex + s)))
                next_vertex += s
            pc = partitioned_clutter_from_parts(next_vertex - 1, parts)
            gens = rees_generators(pc)
            assert verify_rees(gens, pc)
            linear, fiber = fiber_type_split(gens)  # raises on a mixed generator
            assert len(linear) + len(fiber) == len(gens)
            for e in pc.circuits:
                assert chart_contained_in_dehomogenization(pc, e, gens)
            instances += 1
    elapsed = time.perf_counter() - start
    assert elapsed <= 120.0
    print(
        f"ACCEPTANCE 7: PASS - {instances} complete multipartite clutters "
        f"(d <= 3, parts <= 3): substitution, chart containment, fiber split "
        f"all green in {elapsed:.1f}s"
    )


def test_criterion_8_vertex_oracle_agreement():
    rng = random.Random(20250808)
    start = time.perf_counter()
    ideals = 0
    generators = 0
    while ideals < 500:
        n = rng.randint(1, 3)
        gens = set()
        for _ in range(rng.randint(1, 4)):
            for _attempt in range(50):
                e = tuple(rng.randint(0, 3) for _ in range(n))
                if 0 < sum(e) <= 3:
                    gens.add(Monomial(e))
                    break
        if not gens:
            continue
        ideal = make_ideal(n, gens)
        for g in ideal.gens:
            cert = is_vertex(ideal, g)
            assert cert.is_vertex == truncated_vertex_oracle(ideal, g), (ideal.gens, g)
            assert cert.verify(ideal, g)
            generators += 1
        ideals += 1
    elapsed = time.perf_counter() - start
    print(
        f"ACCEPTANCE 8: PASS - {ideals} random ideals / {generators} generator "
        f"tests agree with the truncated-support oracle in {elapsed:.1f}s"
    )


def test_criterion_9_property_suites():
    from tameideal.charts import ChartAlgebra, chart, minimal_algebra_generators
    from tameideal.newton import vertex_generators

    start = time.perf_counter()

    # |U'| >= n at every vertex chart of a random sample
    rng = random.Random(99)
    floor_checked = 0
    for _ in range(80):
        n = rng.randint(1, 4)
        gens = set()
        for _ in range(rng.randint(1, 4)):
            e = tuple(rng.randint(0, 3) for _ in range(n))
            if any(e):
                gens.add(Monomial(e))
        if not gens:
            continue
        ideal = make_ideal(n, gens)
        for center in vertex_generators(ideal):
            assert len(minimal_algebra_generators(chart(ideal, center))) >= n
            floor_checked += 1

    # order independence of the reduction, 20 shuffles per instance
    ideal = make_ideal(3, {M(2, 0, 0), M(0, 3, 0), M(1, 1, 0), M(0, 1, 2)})
    order_checked = 0
    for center in vertex_generators(ideal):
        base = chart(ideal, center)
        expected = minimal_algebra_generators(base)
        gens_list = list(base.gens)
        for _ in range(20):
            rng.shuffle(gens_list)
            assert minimal_algebra_generators(ChartAlgebra(3, tuple(gens_list))) == expected
            order_checked += 1

    # loop charts on five vertices, exhaustively: regular iff every generator
    # support lies in the closed neighborhood of the looped vertex
    n = 5
    other_loops = [2, 3, 4, 5]
    all_edges = [
        frozenset({i, j}) for i in range(1, n + 1) for j in range(i + 1, n + 1)
    ]
    items = [("l", v) for v in other_loops] + [("e", e) for e in all_edges]
    loop_checked = 0
    from conftest import ideal_from_graph

    for code in range(2 ** len(items)):
        loops = {1} | {
            v for k, (kind, v) in enumerate(items) if kind == "l" and code >> k & 1
        }
        edges = {
            v for k, (kind, v) in enumerate(items) if kind == "e" and code >> k & 1
        }
        nbhd = {1} | {next(iter(e - {1})) for e in edges if 1 in e}
        expected = all(set(e) <= nbhd for e in edges) and all(
            v in nbhd for v in loops
        )
        ideal = ideal_from_graph(n, sorted(loops), sorted(edges, key=sorted))
        report = is_chart_regular(ideal, M(2, 0, 0, 0, 0), vertex_checked=True)
        assert report.regular == expected, (sorted(loops), sorted(map(sorted, edges)))
        loop_checked += 1

    # >= 2 linear with >= 2 quadratic generators: linear charts never regular
    degree1_checked = 0
    for n in (4, 5):
        vertices = list(range(1, n + 1))
        for linear in itertools.combinations(vertices, 2):
            rest = [v for v in vertices if v not in linear]
            quads = [(i, j) for i in rest for j in rest if i <= j]
            for pair in itertools.combinations(quads, 2):
                gens = set()
                for v in linear:
                    gens.add(M(*(1 if w == v else 0 for w in vertices)))
                for i, j in pair:
                    exps = [0] * n
                    exps[i - 1] += 1
                    exps[j - 1] += 1
                    gens.add(Monomial(tuple(exps)))
                ideal = make_ideal(n, gens)
                for v in linear:
                    center = M(*(1 if w == v else 0 for w in vertices))
                    assert not is_chart_regular(ideal, center).regular
                    degree1_checked += 1

    elapsed = time.perf_counter() - start
    print(
        f"ACCEPTANCE 9: PASS - reduction floor ({floor_checked}), order independence "
        f"({order_checked}), loop charts n=5 exhaustive ({loop_checked}), linear+quadratic "
        f"irregularity ({degree1_checked}) all green in {elapsed:.1f}s"
    )
