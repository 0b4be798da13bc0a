"""Verification batteries behind ``edgebalance verify``.

Each battery returns a list of ``Check`` records; nothing is printed here.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from . import crown, products, theory
from .graph import Graph, complete_bipartite, complete_graph, crown_graph, cycle_graph, \
    is_regular, path_graph, random_graph
from .labeling import EdgeLabeling, counts, is_edge_friendly
from .search import DEFAULT_BUDGET, BudgetExceeded, find_strongly_edge_balanced, max_index_search


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def crown_range(lo: int, hi: int) -> list[Check]:
    """Constructive witnesses for every index of K_n x K_2, n in lo..hi."""
    if lo < 3 or hi < lo:
        raise ValueError(f"crown range must satisfy 3 <= lo <= hi, got {lo}..{hi}")
    out = []
    for n in range(lo, hi + 1):
        formula = crown.ebi_formula(n)
        detail: dict = {"n": n, "formula": [formula[0], formula[-1], len(formula)]}
        try:
            if n in (3, 5):
                got = []
                for k in formula:
                    lab = crown.labeling_for_index(n, k)
                    got.append(counts(lab).index if is_edge_friendly(lab) else None)
                ok = got == formula
                detail["source"] = "table"
            else:
                sched = crown.switch_schedule(n)
                trajectory = crown.verify_schedule(sched)
                ok = sorted(trajectory) == formula and trajectory[0] == formula[-1]
                detail.update(source="schedule", steps=len(sched.steps), delta=sched.step_delta)
        except (AssertionError, ValueError) as exc:
            ok = False
            detail["error"] = str(exc)
        out.append(Check(f"crown-{n}", ok, detail))
    return out


def lemma3(graphs: list[tuple[str, Graph]], budget: int = DEFAULT_BUDGET, jobs: int = 1) -> list[Check]:
    """Exhaustive maximum index against the odd-regular upper bound."""
    out = []
    for name, g in graphs:
        r = is_regular(g)
        bound = theory.lemma3_bound(g.p, r) if r else None
        if bound is None:
            raise ValueError(f"{name}: the regular-graph bound needs an odd-regular graph")
        top, witness = max_index_search(g, budget=budget, jobs=jobs)
        out.append(Check(f"lemma3-{name}", top <= bound.floor,
                         {"max_index": top, "bound": bound.to_dict(), "witness": witness.bits}))
    return out


def random_edge_friendly(g: Graph, rng: random.Random) -> EdgeLabeling:
    k = g.q // 2 + (rng.random() < 0.5 if g.q % 2 else 0)
    ones = set(rng.sample(range(g.q), k))
    return EdgeLabeling(g, tuple(int(i in ones) for i in range(g.q)))


def lemma5(name: str, g: Graph, samples: int, seed: int) -> list[Check]:
    """Sampled labelings of an all-odd-degree graph: no ties, even index."""
    if not theory.all_degrees_odd(g):
        raise ValueError(f"{name}: the parity check needs every vertex of odd degree")
    rng = random.Random(seed)
    bad = []
    indices: dict[int, int] = {}
    for s in range(samples):
        c = counts(random_edge_friendly(g, rng))
        indices[c.index] = indices.get(c.index, 0) + 1
        if c.unlabeled or c.index % 2:
            bad.append(s)
    return [Check(f"lemma5-{name}", not bad,
                  {"samples": samples, "seed": seed, "failures": bad[:10],
                   "index_counts": {str(k): indices[k] for k in sorted(indices)}})]


def _adjacent(kind: str, g: Graph, h: Graph, x: int, y: int) -> bool:
    m = h.p
    (x1, y1), (x2, y2) = divmod(x, m), divmod(y, m)
    e1, e2 = g.has_edge(x1, x2) if x1 != x2 else False, h.has_edge(y1, y2) if y1 != y2 else False
    if kind == "lex":
        return e1 or (x1 == x2 and e2)
    if kind == "direct":
        return e1 and e2
    return (y1 == y2 and e1) or (x1 == x2 and e2)


def product_size_by_pairs(kind: str, g: Graph, h: Graph) -> int:
    """Edge count of a product from its adjacency rule over all vertex pairs."""
    return sum(_adjacent(kind, g, h, x, y) for x, y in combinations(range(g.p * h.p), 2))


_SIZE = {
    "lex": products.lexicographic_size,
    "direct": products.direct_size,
    "cartesian": products.cartesian_size,
}


def prop2(trials: int, max_p: int, seed: int) -> list[Check]:
    if max_p < 1 or trials < 0:
        raise ValueError("prop2 needs trials >= 0 and max-p >= 1")
    rng = random.Random(seed)
    mismatches = []
    for t in range(trials):
        g = random_graph(rng.randint(1, max_p), rng.random(), rng)
        h = random_graph(rng.randint(1, max_p), rng.random(), rng)
        for kind, build in products.PRODUCTS.items():
            prod = build(g, h)
            by_pairs = product_size_by_pairs(kind, g, h)
            formula = _SIZE[kind](g, h)
            if not (prod.q == by_pairs == formula and prod.p == g.p * h.p):
                mismatches.append({"trial": t, "kind": kind, "built": prod.q,
                                   "pairs": by_pairs, "formula": formula})
    return [Check("prop2", not mismatches,
                  {"trials": trials, "max_p": max_p, "seed": seed, "mismatches": mismatches[:10]})]


EVEN_SIZE_CORPUS = [
    ("C4", cycle_graph(4)), ("C6", cycle_graph(6)), ("C8", cycle_graph(8)),
    ("P3", path_graph(3)), ("P5", path_graph(5)), ("P7", path_graph(7)),
    ("K4", complete_graph(4)), ("K2,4", complete_bipartite(2, 4)), ("crown3", crown_graph(3)),
]

PRODUCT_FACTORS = [
    ("K2", complete_graph(2)), ("P3", path_graph(3)), ("K3", complete_graph(3)),
    ("C4", cycle_graph(4)), ("K1,3", complete_bipartite(1, 3)), ("P4", path_graph(4)),
]


def _strong(g: Graph, budget: int, jobs: int) -> Optional[bool]:
    try:
        return find_strongly_edge_balanced(g, budget=budget, jobs=jobs) is not None
    except BudgetExceeded:
        return None


def theorem3(budget: int = DEFAULT_BUDGET, jobs: int = 1, max_q: int = 24) -> list[Check]:
    """Strongly balanced labelings on a connected even-size corpus, then products.

    Product pairs whose result has more than ``max_q`` edges are skipped.
    """
    out = []
    for name, g in EVEN_SIZE_CORPUS:
        lab = find_strongly_edge_balanced(g, budget=budget, jobs=jobs)
        out.append(Check(f"strong-{name}", lab is not None,
                         {"q": g.q, "witness": lab.bits if lab is not None else None}))
    for (gn, g), (hn, h) in [(a, b) for a in PRODUCT_FACTORS for b in PRODUCT_FACTORS]:
        cond = theory.theorem3_conditions(g, h)
        found = {}
        for kind in ("cartesian", "lex", "direct"):
            prod = products.PRODUCTS[kind](g, h)
            found[kind] = _strong(prod, budget, jobs) if prod.q <= max_q else None
        detail = {"conditions": cond.to_dict(), "strongly_balanced": found}
        if found["direct"] is not None:
            out.append(Check(f"direct-{gn}-{hn}", found["direct"], detail))
        sq_or_lex = [found[k] for k in ("cartesian", "lex") if found[k] is not None]
        if sq_or_lex:
            out.append(Check(f"necessity-{gn}-{hn}", not any(sq_or_lex) or cond.any_holds, detail))
        if found["cartesian"] is not None and found["lex"] is not None:
            out.append(Check(f"equivalence-{gn}-{hn}", found["cartesian"] == found["lex"], detail))
    return out
