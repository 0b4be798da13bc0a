"""Acceptance criteria, one test per criterion.

Each test appends a PASS/FAIL line that is printed in the pytest summary.
"""
import json
import time

from conftest import ACCEPTANCE_LINES
from edgebalance import checks, crown
from edgebalance.cli import main
from edgebalance.graph import (complete_bipartite, complete_graph, crown_graph, cycle_graph, hypercube,
                               path_graph)
from edgebalance.labeling import EdgeLabeling, counts, is_edge_friendly, to_labeling_text
from edgebalance.products import PRODUCTS
from edgebalance.search import compute_ebi, find_strongly_edge_balanced, max_index_search
from edgebalance.theory import lemma3_bound, theorem3_conditions


def verdict(number, title, ok, detail=""):
    ACCEPTANCE_LINES.append(f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}")
    assert ok, detail


def test_criterion_1_small_crowns():
    t0 = time.perf_counter()
    got = {n: compute_ebi(crown_graph(n)).index_set for n in (3, 4, 5)}
    elapsed = time.perf_counter() - t0
    ok = got == {3: (0,), 4: (0, 2, 4), 5: (0, 1, 2)} and elapsed < 10.0
    verdict(1, "EBI of crown(3..5) is {0}, {0,2,4}, {0,1,2}", ok, f"{got} in {elapsed:.2f}s (limit 10s)")


def test_criterion_2_constructive_coverage():
    t0 = time.perf_counter()
    failures = []
    for n in list(range(4, 51, 2)) + list(range(7, 52, 2)) + [5]:
        expected = list(range(0, 2 * n - 3, 2)) if n % 2 == 0 else list(range(0, 2 * n - 7))
        if crown.ebi_formula(n) != expected:
            failures.append((n, "formula"))
        for k in expected:
            lab = crown.labeling_for_index(n, k)
            if not (is_edge_friendly(lab) and counts(lab).index == k and lab.graph == crown_graph(n)):
                failures.append((n, k))
    elapsed = time.perf_counter() - t0
    verdict(2, "witness for every index, even n 4..50, odd n 7..51, n=5 tables",
            not failures and elapsed < 60.0, f"failures={failures[:5]} in {elapsed:.1f}s (limit 60s)")


def test_criterion_3_schedule_monotonicity():
    bad = []
    for n in list(range(4, 51, 2)) + list(range(7, 52, 2)):
        sched = crown.switch_schedule(n)
        labels = list(sched.start.labels)
        trajectory = [counts(sched.start).index]
        for step in sched.steps:
            if labels[step.zero_edge] != 0 or labels[step.one_edge] != 1:
                bad.append((n, "swap precondition"))
                break
            labels[step.zero_edge], labels[step.one_edge] = 1, 0
            lab = EdgeLabeling(sched.graph, tuple(labels))
            if not is_edge_friendly(lab):
                bad.append((n, "friendliness"))
            trajectory.append(counts(lab).index)
        start = 2 * n - 4 if n % 2 == 0 else 2 * n - 8
        delta = 2 if n % 2 == 0 else 1
        if trajectory != list(range(start, -1, -delta)):
            bad.append((n, trajectory))
    verdict(3, "schedule replay start, start-d, ..., 0", not bad, f"violations={bad[:3]}")


def test_criterion_4_crown6_oracle():
    t0 = time.perf_counter()
    report = compute_ebi(crown_graph(6), jobs=8)
    elapsed = time.perf_counter() - t0
    ok = report.complete and report.enumerated == 155117520 and report.index_set == (0, 2, 4, 6, 8)
    verdict(4, "exhaustive EBI(crown(6)) = {0,2,4,6,8}", ok and elapsed < 600,
            f"{report.index_set} over {report.enumerated} labelings in {elapsed:.1f}s (limit 600s)")


def test_criterion_5_regular_bound():
    crown_max = max_index_search(crown_graph(4))[0]
    k4_max = max_index_search(complete_graph(4))[0]
    k33_max = max_index_search(complete_bipartite(3, 3))[0]
    ok = (crown_max == lemma3_bound(8, 3).bound == 4
          and k4_max <= lemma3_bound(4, 3).floor
          and k33_max <= lemma3_bound(6, 3).floor)
    verdict(5, "odd-regular maximum index bound", ok,
            f"crown(4) max {crown_max} = 4; K4 max {k4_max} <= {lemma3_bound(4, 3).floor}; "
            f"K3,3 max {k33_max} <= {lemma3_bound(6, 3).floor}")


def test_criterion_6_odd_degree_parity():
    results = []
    for name, g in [("crown4", crown_graph(4)), ("K4", complete_graph(4)), ("Q3", hypercube(3))]:
        results += checks.lemma5(name, g, samples=1000, seed=5)
    verdict(6, "1000 seeded samples each: no unlabeled vertex, even index", all(c.passed for c in results),
            ", ".join(f"{c.name}:{c.detail['index_counts']}" for c in results))


def test_criterion_7_prop2():
    result = checks.prop2(trials=100, max_p=8, seed=7)[0]
    verdict(7, "100 seeded product pairs match the size formulas", result.passed,
            f"mismatches={result.detail['mismatches']}")


def test_criterion_8_strongly_balanced_products():
    corpus = [("C4", cycle_graph(4)), ("C6", cycle_graph(6)), ("C8", cycle_graph(8)), ("P3", path_graph(3)),
              ("P5", path_graph(5)), ("P7", path_graph(7)), ("K4", complete_graph(4)),
              ("K2,4", complete_bipartite(2, 4)), ("crown3", crown_graph(3))]
    missing = [name for name, g in corpus if find_strongly_edge_balanced(g) is None]
    bad_pairs = []
    n_pairs = 0
    for gn, g in corpus[:4] + [("K2", complete_graph(2)), ("K3", complete_graph(3))]:
        for hn, h in [("K2", complete_graph(2)), ("P3", path_graph(3)), ("K3", complete_graph(3))]:
            n_pairs += 1
            found = {}
            for kind, build in PRODUCTS.items():
                prod = build(g, h)
                found[kind] = find_strongly_edge_balanced(prod) is not None if prod.q <= 24 else None
            if (found["cartesian"] or found["lex"]) and not theorem3_conditions(g, h).any_holds:
                bad_pairs.append((gn, hn, "necessity"))
            if found["direct"] is False:
                bad_pairs.append((gn, hn, "direct"))
    battery = [c.name for c in checks.theorem3() if not c.passed]
    ok = not missing and not bad_pairs and not battery
    verdict(8, "strongly balanced corpus and product checks", ok,
            f"corpus misses={missing}, {n_pairs} pairs, pair failures={bad_pairs}, battery failures={battery}")


def _twice(capsys, argv):
    outs = []
    for _ in range(2):
        code = main(argv)
        outs.append((code, capsys.readouterr().out))
    return outs


def test_criterion_9_determinism(capsys, tmp_path):
    lab_file = tmp_path / "lab.txt"
    lab_file.write_text(to_labeling_text(crown.labeling_for_index(5, 2)))
    commands = [
        ["ebi", "crown:5"], ["ebi", "crown:5", "--jobs", "4"], ["ebi", "crown:5", "--budget", "5000"],
        ["construct", "9"], ["construct", "8", "--k", "12", "--format", "dot"],
        ["label", str(lab_file)], ["verify", "crown-range", "3..15"], ["verify", "lemma3"],
        ["verify", "lemma5", "--graph", "cube:3", "--samples", "300"], ["verify", "prop2", "--trials", "30"],
        ["verify", "theorem3", "--max-q", "16"],
    ]
    differing = []
    for argv in commands:
        (c1, o1), (c2, o2) = _twice(capsys, argv)
        if c1 != c2 or o1 != o2 or not o1.endswith("\n"):
            differing.append(" ".join(argv))
    jobs_equal = json.loads(_twice(capsys, ["ebi", "crown:5"])[0][1]) == \
        json.loads(_twice(capsys, ["ebi", "crown:5", "--jobs", "3"])[0][1])
    verdict(9, "byte-identical repeated CLI runs", not differing and jobs_equal,
            f"{len(commands)} commands, differing={differing}, jobs-independent={jobs_equal}")
